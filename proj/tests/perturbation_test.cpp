#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dominion/error.hpp"
#include "dominion/families.hpp"
#include "dominion/oracle.hpp"
#include "dominion/perturbation.hpp"

using namespace dominion;
using namespace dominion::perturbation;

namespace {

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(M1, Examples) {
  EXPECT_EQ(m1_of(3, {"b8"}), 1u);
  EXPECT_EQ(m1_of(3, {"b8", "b9"}), 0u);
  EXPECT_EQ(m1_of(3, {"b8", "b10"}), 2u);
  EXPECT_EQ(m1_of(3, {}), 0u);
  EXPECT_EQ(m1_of(3, {"b8", "b8"}), 1u);
  EXPECT_EQ(error_kind([] { m1_of(3, {"b4"}); }), ErrorKind::NotALevelHLeaf);
  EXPECT_EQ(error_kind([] { m1_of(3, {"b16"}); }), ErrorKind::NotALevelHLeaf);
  EXPECT_EQ(error_kind([] { m1_of(3, {"leaf"}); }), ErrorKind::NotALevelHLeaf);
}

TEST(AnalyzeDeletion, SingleLeafOfT3) {
  const LeafDeletionReport r = analyze_deletion(3, {"b8"});
  EXPECT_EQ(r.m1, 1u);
  EXPECT_EQ(r.gamma_before, 5);
  EXPECT_EQ(r.gamma_after, 5);
  EXPECT_EQ(r.zeta_before, 3);
  EXPECT_EQ(r.zeta_after, 6);
  EXPECT_EQ(r.envelope, 6);
  EXPECT_TRUE(r.bound_holds);
}

TEST(AnalyzeDeletion, EmptyDeletion) {
  const LeafDeletionReport r = analyze_deletion(2, {});
  EXPECT_EQ(r.m1, 0u);
  EXPECT_EQ(r.gamma_before, 2);
  EXPECT_EQ(r.gamma_after, 2);
  EXPECT_EQ(r.zeta_before, 1);
  EXPECT_EQ(r.zeta_after, 1);
  EXPECT_EQ(r.envelope, 1);
  EXPECT_TRUE(r.bound_holds);
}

TEST(AnalyzeDeletion, SiblingPairExceedsEnvelope) {
  // T_2 - {b4, b5}: b2 becomes a leaf, and both {b1, b3} and {b2, b3} are
  // minimum, while no parent lost exactly one child.
  const LeafDeletionReport r = analyze_deletion(2, {"b4", "b5"});
  EXPECT_EQ(r.m1, 0u);
  EXPECT_EQ(r.envelope, r.zeta_before);
  EXPECT_EQ(r.gamma_after, 2);
  EXPECT_EQ(r.zeta_after, 2);
  EXPECT_FALSE(r.bound_holds);
  EXPECT_EQ(oracle::oracle_count(families::delete_leaves(families::make_complete_binary(2), r.deleted)).zeta, 2);
}

TEST(AnalyzeDeletion, MixedDeletions) {
  const LeafDeletionReport two_parents = analyze_deletion(3, {"b10", "b8"});
  EXPECT_EQ(two_parents.deleted, (std::vector<std::string>{"b8", "b10"}));
  EXPECT_EQ(two_parents.zeta_after, 11);
  EXPECT_EQ(two_parents.envelope, 12);
  EXPECT_TRUE(two_parents.bound_holds);

  const LeafDeletionReport siblings = analyze_deletion(3, {"b8", "b9"});
  EXPECT_EQ(siblings.gamma_after, 4);
  EXPECT_EQ(siblings.zeta_after, 1);
}

TEST(AnalyzeDeletion, Errors) {
  EXPECT_EQ(error_kind([] { analyze_deletion(1, {"b2"}); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(error_kind([] { analyze_deletion(2, {"b4", "b5", "b6", "b7"}); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(error_kind([] { analyze_deletion(3, {"b3"}); }), ErrorKind::NotALevelHLeaf);
}

TEST(AnalyzeDeletion, AfterValuesMatchOracle) {
  std::mt19937_64 gen(19);
  for (std::uint64_t h : {2, 3}) {
    const std::uint64_t width = std::uint64_t{1} << h;
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = random_deletion_set(h, gen() % width, gen());
      const LeafDeletionReport r = analyze_deletion(h, x);
      const auto truth = oracle::oracle_count(families::delete_leaves(families::make_complete_binary(h), x));
      EXPECT_EQ(r.gamma_after, truth.gamma);
      EXPECT_EQ(r.zeta_after, truth.zeta);
      EXPECT_LE(r.m1, x.size());
      EXPECT_LE(r.m1, width / 2);
      EXPECT_EQ(r.bound_holds, r.zeta_after <= r.envelope);
    }
  }
}

TEST(SingleLeaf, DoublingCheckExamples) {
  EXPECT_TRUE(single_leaf_doubling_check(2));
  EXPECT_TRUE(single_leaf_doubling_check(3));
  EXPECT_TRUE(single_leaf_doubling_check(6));
  EXPECT_EQ(error_kind([] { single_leaf_doubling_check(1); }), ErrorKind::InvalidParameter);
}

TEST(SingleLeaf, ReportsAreIdenticalAcrossLeaves) {
  for (std::uint64_t h = 2; h <= 8; ++h) {
    const auto reports = single_leaf_reports(h);
    ASSERT_EQ(reports.size(), std::uint64_t{1} << h);
    for (const auto& r : reports) {
      EXPECT_EQ(r.gamma_after, reports.front().gamma_after);
      EXPECT_EQ(r.zeta_after, reports.front().zeta_after);
      EXPECT_EQ(r.gamma_after, r.gamma_before) << "h=" << h;
      EXPECT_EQ(r.m1, 1u);
    }
  }
}

TEST(RandomDeletionSet, DeterministicDistinctAndOnLevel) {
  EXPECT_EQ(random_deletion_set(5, 7, 99), random_deletion_set(5, 7, 99));
  for (std::uint64_t size = 0; size <= 16; ++size) {
    const auto x = random_deletion_set(4, size, size * 13);
    ASSERT_EQ(x.size(), size);
    std::set<std::uint64_t> seen;
    for (const auto& label : x) {
      const auto k = families::binary_heap_index(label);
      EXPECT_GE(k, 16u);
      EXPECT_LT(k, 32u);
      seen.insert(k);
    }
    EXPECT_EQ(seen.size(), size);
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  }
  EXPECT_THROW(random_deletion_set(2, 5, 0), Error);
}

TEST(Csv, RowsRoundTrip) {
  EXPECT_EQ(csv_header(), "h,X,m1,gamma_before,gamma_after,zeta_before,zeta_after,envelope,holds");
  const LeafDeletionReport r = analyze_deletion(3, {"b8", "b10"});
  EXPECT_EQ(to_csv_row(r), "3,b8+b10,2,5,5,3,11,12,true");
  EXPECT_EQ(parse_csv_row(to_csv_row(r)), r);
  const LeafDeletionReport empty = analyze_deletion(4, {});
  EXPECT_EQ(parse_csv_row(to_csv_row(empty)), empty);
  EXPECT_THROW(parse_csv_row("3,b8,1"), Error);
}
