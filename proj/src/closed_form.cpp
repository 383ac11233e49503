#include "dominion/closed_form.hpp"

#include "dominion/dp_counter.hpp"
#include "dominion/error.hpp"

namespace dominion::closed_form {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidParameter, message);
}

}  // namespace

BigCount fibonacci(std::uint64_t t) {
  require(t >= 1, "Fibonacci index must be >= 1");
  BigCount previous = 1;  // F_{i-1}
  BigCount current = 1;   // F_i
  for (std::uint64_t i = 2; i < t; ++i) {
    BigCount next = current + previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

DominationSummary uniform_pendant_summary(std::uint64_t n, std::uint64_t r) {
  require(n >= 1 && r >= 1, "uniform pendant tree needs n >= 1 and r >= 1");
  return {BigCount(n), r == 1 ? pow2(n) : BigCount(1)};
}

DominationSummary comb_summary(std::uint64_t n) { return uniform_pendant_summary(n, 1); }

DominationSummary star_summary(std::uint64_t m) {
  require(m >= 1, "star needs m >= 1");
  return {BigCount(1), BigCount(m == 1 ? 2 : 1)};
}

DominationSummary interior_pendant_summary(std::uint64_t n) {
  require(n >= 2, "interior pendant tree needs n >= 2");
  if (n == 2) return {BigCount(1), BigCount(2)};
  if (n == 3) return {BigCount(1), BigCount(1)};
  const std::uint64_t gamma = n - 2;
  return {BigCount(gamma), pow2(gamma - 2)};
}

DominationSummary alternating_summary(std::uint64_t n, families::Parity parity) {
  require(n >= 2, "alternating comb needs n >= 2");
  const std::uint64_t k = n / 2;
  const bool even_length = n % 2 == 0;
  if (parity == families::Parity::even) {
    return {BigCount(k), fibonacci(even_length ? k + 1 : k)};
  }
  return {BigCount(n - k), fibonacci(even_length ? k + 1 : k + 3)};
}

DominationSummary binary_summary(std::uint64_t h) {
  require(h >= 1, "complete binary tree needs h >= 1");
  const BigCount gamma = (pow2(h + 2) + 3) / 7;
  return {gamma, BigCount(h % 3 == 0 && h >= 3 ? 3 : 1)};
}

bool has_closed_form(const FamilySpec& spec) noexcept {
  if (spec.kind == FamilyKind::random) return false;
  if (spec.kind == FamilyKind::complete_binary && !spec.deleted_leaves.empty()) return false;
  return true;
}

DominationSummary summary_for(const FamilySpec& spec) {
  if (!has_closed_form(spec)) {
    throw Error(ErrorKind::NoClosedForm, "no closed form for '" + to_string(spec) + "'");
  }
  auto need = [](const std::optional<std::uint64_t>& value, const char* name) {
    if (!value) throw Error(ErrorKind::InvalidParameter, std::string("missing parameter ") + name);
    return *value;
  };
  switch (spec.kind) {
    case FamilyKind::uniform_pendant: return uniform_pendant_summary(need(spec.n, "n"), need(spec.r, "r"));
    case FamilyKind::comb: return comb_summary(need(spec.n, "n"));
    case FamilyKind::interior_pendant: return interior_pendant_summary(need(spec.n, "n"));
    case FamilyKind::alternating_even: return alternating_summary(need(spec.n, "n"), families::Parity::even);
    case FamilyKind::alternating_odd: return alternating_summary(need(spec.n, "n"), families::Parity::odd);
    case FamilyKind::star: return star_summary(need(spec.n, "m"));
    case FamilyKind::complete_binary: return binary_summary(need(spec.h, "h"));
    case FamilyKind::path: {
      // Only gamma has a formula; zeta comes from the DP.
      const std::uint64_t n = need(spec.n, "n");
      require(n >= 1, "path needs n >= 1");
      return {BigCount((n + 2) / 3), dp::dp_count(families::make_path(n)).zeta};
    }
    case FamilyKind::random: break;
  }
  throw Error(ErrorKind::NoClosedForm, "no closed form for '" + to_string(spec) + "'");
}

}  // namespace dominion::closed_form
