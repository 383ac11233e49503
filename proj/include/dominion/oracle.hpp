#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dominion/big_count.hpp"
#include "dominion/tree.hpp"

namespace dominion::oracle {

inline constexpr std::size_t kDefaultCap = 24;
/// Subsets are bitmasks over a 64-bit word.
inline constexpr std::size_t kMaxCap = 63;

/// All minimum dominating sets of a tree, each sorted, listed in
/// lexicographic order. Construction re-verifies every set.
class WitnessSets {
 public:
  WitnessSets(const Tree& tree, std::uint64_t gamma, std::vector<std::vector<std::string>> sets);

  std::uint64_t gamma() const noexcept { return gamma_; }
  const std::vector<std::vector<std::string>>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

 private:
  std::uint64_t gamma_;
  std::vector<std::vector<std::string>> sets_;
};

/// Size-ascending exhaustive search. Throws Error(TooLarge) when the tree has
/// more than `cap` vertices.
DominationSummary oracle_count(const Tree& tree, std::size_t cap = kDefaultCap);

WitnessSets enumerate_min_sets(const Tree& tree, std::size_t cap = kDefaultCap);

/// True iff every vertex is in `members` or adjacent to one of them.
/// Throws Error(UnknownVertex) for labels not in the tree.
bool is_dominating(const Tree& tree, const std::vector<std::string>& members);

}  // namespace dominion::oracle
