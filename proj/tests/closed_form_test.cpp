#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "dominion/closed_form.hpp"
#include "dominion/dp_counter.hpp"
#include "dominion/error.hpp"

using namespace dominion;
using namespace dominion::closed_form;
using families::Parity;

namespace {

DominationSummary S(std::uint64_t gamma, const BigCount& zeta) { return {BigCount(gamma), zeta}; }

ErrorKind error_kind_of(const FamilySpec& spec) {
  try {
    summary_for(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE();
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Fibonacci, Values) {
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(4), 3);
  EXPECT_EQ(fibonacci(7), 13);
  EXPECT_EQ(to_decimal(fibonacci(100)), "354224848179261915075");
  EXPECT_THROW(fibonacci(0), Error);
}

TEST(Fibonacci, CassiniIdentity) {
  for (std::uint64_t t = 2; t <= 60; ++t) {
    const BigCount lhs = fibonacci(t + 1) * fibonacci(t - 1) - fibonacci(t) * fibonacci(t);
    EXPECT_EQ(lhs, t % 2 == 0 ? 1 : -1) << "t=" << t;
  }
}

TEST(Fibonacci, RatioApproachesGoldenRatio) {
  using Real = boost::multiprecision::cpp_dec_float_50;
  const Real phi = (1 + boost::multiprecision::sqrt(Real(5))) / 2;
  for (std::uint64_t k = 30; k <= 90; ++k) {
    const Real ratio = Real(fibonacci(k + 1)) / Real(fibonacci(k));
    EXPECT_LE(boost::multiprecision::abs(ratio - phi), Real("1e-10")) << "k=" << k;
  }
}

TEST(UniformPendant, Values) {
  EXPECT_EQ(uniform_pendant_summary(4, 1), S(4, 16));
  EXPECT_EQ(uniform_pendant_summary(4, 2), S(4, 1));
  EXPECT_EQ(to_decimal(uniform_pendant_summary(70, 1).zeta), "1180591620717411303424");
  EXPECT_THROW(uniform_pendant_summary(0, 2), Error);
}

TEST(Star, Values) {
  EXPECT_EQ(star_summary(1), S(1, 2));
  EXPECT_EQ(star_summary(2), S(1, 1));
  EXPECT_EQ(star_summary(9), S(1, 1));
  EXPECT_THROW(star_summary(0), Error);
}

TEST(InteriorPendant, Values) {
  EXPECT_EQ(interior_pendant_summary(2), S(1, 2));
  EXPECT_EQ(interior_pendant_summary(3), S(1, 1));
  EXPECT_EQ(interior_pendant_summary(6), S(4, 4));
  // G'_3 is K_{1,3}.
  EXPECT_EQ(interior_pendant_summary(3), star_summary(3));
  EXPECT_THROW(interior_pendant_summary(1), Error);
}

TEST(Alternating, Values) {
  EXPECT_EQ(alternating_summary(6, Parity::even), S(3, 3));
  EXPECT_EQ(alternating_summary(9, Parity::odd), S(5, 13));
  EXPECT_EQ(alternating_summary(5, Parity::even), S(2, 1));
  EXPECT_THROW(alternating_summary(1, Parity::even), Error);
}

TEST(Alternating, VerificationTableRows) {
  struct Row {
    std::uint64_t n, ge, ze, go, zo;
  };
  const Row rows[] = {{2, 1, 1, 1, 1}, {3, 1, 1, 2, 3}, {4, 2, 2, 2, 2}, {5, 2, 1, 3, 5}, {6, 3, 3, 3, 3},
                      {7, 3, 2, 4, 8}, {8, 4, 5, 4, 5}, {9, 4, 3, 5, 13}, {10, 5, 8, 5, 8}};
  for (const Row& r : rows) {
    EXPECT_EQ(alternating_summary(r.n, Parity::even), S(r.ge, r.ze)) << "E_" << r.n;
    EXPECT_EQ(alternating_summary(r.n, Parity::odd), S(r.go, r.zo)) << "O_" << r.n;
  }
}

TEST(Binary, Values) {
  EXPECT_EQ(binary_summary(3), S(5, 3));
  EXPECT_EQ(binary_summary(2), S(2, 1));
  EXPECT_EQ(binary_summary(6), S(37, 3));
  EXPECT_THROW(binary_summary(0), Error);
}

TEST(Binary, PeriodThreeDominion) {
  const int expected[] = {1, 1, 3, 1, 1, 3, 1, 1, 3, 1, 1, 3};
  for (std::uint64_t h = 1; h <= 12; ++h) EXPECT_EQ(binary_summary(h).zeta, expected[h - 1]) << "h=" << h;
}

TEST(Binary, GammaSatisfiesThreeLevelRecurrenceBeyondWordSize) {
  // gamma(T_h) = gamma(T_{h-3}) + 2^{h-1}: the bottom-but-one level plus a
  // minimum set of the top h-3 levels.
  for (std::uint64_t h = 4; h <= 200; ++h) {
    EXPECT_EQ(binary_summary(h).gamma, binary_summary(h - 3).gamma + pow2(h - 1)) << "h=" << h;
  }
}

TEST(SummaryFor, Dispatch) {
  EXPECT_EQ(summary_for(parse_family_spec("uniform:n=4,r=1")), S(4, 16));
  EXPECT_EQ(summary_for(parse_family_spec("star:m=1")), S(1, 2));
  EXPECT_EQ(summary_for(parse_family_spec("comb:n=3")), S(3, 8));
  EXPECT_EQ(summary_for(parse_family_spec("path:n=5")), S(2, 3));
  EXPECT_EQ(summary_for(parse_family_spec("path:n=7")), S(3, 8));
  EXPECT_EQ(error_kind_of(parse_family_spec("binary:h=3,delete=b8")), ErrorKind::NoClosedForm);
  EXPECT_EQ(error_kind_of(parse_family_spec("random:n=5,seed=1")), ErrorKind::NoClosedForm);
}

TEST(ClosedFormVsDp, UniformPendant) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t r = 1; r <= 3; ++r) {
      EXPECT_EQ(uniform_pendant_summary(n, r), dp::dp_count(families::make_uniform_pendant(n, r)))
          << "n=" << n << " r=" << r;
    }
  }
}

TEST(ClosedFormVsDp, InteriorPendant) {
  for (std::uint64_t n = 2; n <= 14; ++n) {
    EXPECT_EQ(interior_pendant_summary(n), dp::dp_count(families::make_interior_pendant(n))) << "n=" << n;
  }
}

TEST(ClosedFormVsDp, Alternating) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    for (Parity p : {Parity::even, Parity::odd}) {
      EXPECT_EQ(alternating_summary(n, p), dp::dp_count(families::make_alternating(n, p))) << "n=" << n;
    }
  }
}

TEST(ClosedFormVsDp, StarsAndBinaryTrees) {
  for (std::uint64_t m = 1; m <= 10; ++m) EXPECT_EQ(star_summary(m), dp::dp_count(families::make_star(m)));
  for (std::uint64_t h = 1; h <= 14; ++h) {
    EXPECT_EQ(binary_summary(h), dp::dp_count(families::make_complete_binary(h))) << "h=" << h;
  }
}
