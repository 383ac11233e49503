#pragma once

#include <cstdint>

#include "dominion/big_count.hpp"
#include "dominion/families.hpp"
#include "dominion/family_spec.hpp"

namespace dominion::closed_form {

/// F_t with F_1 = F_2 = 1, by t - 2 additions.
BigCount fibonacci(std::uint64_t t);

DominationSummary uniform_pendant_summary(std::uint64_t n, std::uint64_t r);
DominationSummary comb_summary(std::uint64_t n);
DominationSummary star_summary(std::uint64_t m);
DominationSummary interior_pendant_summary(std::uint64_t n);
DominationSummary alternating_summary(std::uint64_t n, families::Parity parity);
DominationSummary binary_summary(std::uint64_t h);

/// Dispatches on spec.kind. Bare paths use gamma = ceil(n/3) with zeta from
/// the tree DP. Random trees and binary trees with deletions throw
/// Error(NoClosedForm).
DominationSummary summary_for(const FamilySpec& spec);

bool has_closed_form(const FamilySpec& spec) noexcept;

}  // namespace dominion::closed_form
