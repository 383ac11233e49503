#include "dominion/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "dominion/error.hpp"

namespace dominion::oracle {

namespace {

/// Vertices renumbered by sorted label; bit i stands for the i-th label.
struct BitTree {
  std::vector<VertexId> by_rank;
  std::vector<std::uint64_t> closed_neighborhood;
  std::uint64_t all = 0;
};

BitTree to_bits(const Tree& tree, std::size_t cap) {
  if (cap > kMaxCap) {
    throw Error(ErrorKind::InvalidParameter, "oracle cap must be at most " + std::to_string(kMaxCap));
  }
  const std::size_t n = tree.vertex_count();
  if (n > cap) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceeds oracle cap " + std::to_string(cap));
  }
  BitTree bits;
  bits.by_rank.resize(n);
  std::iota(bits.by_rank.begin(), bits.by_rank.end(), VertexId{0});
  std::sort(bits.by_rank.begin(), bits.by_rank.end(),
            [&](VertexId a, VertexId b) { return tree.label(a) < tree.label(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[bits.by_rank[i]] = i;

  bits.closed_neighborhood.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t mask = std::uint64_t{1} << i;
    for (VertexId w : tree.neighbors(bits.by_rank[i])) mask |= std::uint64_t{1} << rank[w];
    bits.closed_neighborhood[i] = mask;
  }
  bits.all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return bits;
}

bool dominates(const BitTree& bits, std::uint64_t subset) {
  std::uint64_t covered = 0;
  for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
    covered |= bits.closed_neighborhood[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return covered == bits.all;
}

/// Visits every k-subset of n bits in increasing numeric order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k == 0) {
    visit(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t subset = (std::uint64_t{1} << k) - 1;
  while (subset < limit) {
    visit(subset);
    const std::uint64_t low = subset & (~subset + 1);
    const std::uint64_t ripple = subset + low;
    if (ripple == 0) break;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
}

/// Smallest k with a dominating k-subset, and all such subsets.
std::pair<std::uint64_t, std::vector<std::uint64_t>> search(const BitTree& bits) {
  const std::size_t n = bits.by_rank.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::uint64_t> found;
    for_each_subset(n, k, [&](std::uint64_t subset) {
      if (dominates(bits, subset)) found.push_back(subset);
    });
    if (!found.empty()) return {k, std::move(found)};
  }
  return {n, {}};  // unreachable: V itself dominates
}

}  // namespace

WitnessSets::WitnessSets(const Tree& tree, std::uint64_t gamma, std::vector<std::vector<std::string>> sets)
    : gamma_(gamma), sets_(std::move(sets)) {
  for (auto& set : sets_) {
    std::sort(set.begin(), set.end());
    if (set.size() != gamma_) {
      throw Error(ErrorKind::InvalidParameter, "witness set size differs from gamma");
    }
    if (!is_dominating(tree, set)) {
      throw Error(ErrorKind::InvalidParameter, "witness set does not dominate the tree");
    }
  }
  std::sort(sets_.begin(), sets_.end());
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
    throw Error(ErrorKind::InvalidParameter, "duplicate witness set");
  }
}

DominationSummary oracle_count(const Tree& tree, std::size_t cap) {
  const BitTree bits = to_bits(tree, cap);
  const auto [gamma, found] = search(bits);
  return {BigCount(gamma), BigCount(found.size())};
}

WitnessSets enumerate_min_sets(const Tree& tree, std::size_t cap) {
  const BitTree bits = to_bits(tree, cap);
  const auto [gamma, found] = search(bits);
  std::vector<std::vector<std::string>> sets;
  sets.reserve(found.size());
  for (std::uint64_t subset : found) {
    std::vector<std::string> members;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      members.push_back(tree.label(bits.by_rank[static_cast<std::size_t>(std::countr_zero(rest))]));
    }
    sets.push_back(std::move(members));
  }
  return WitnessSets(tree, gamma, std::move(sets));
}

bool is_dominating(const Tree& tree, const std::vector<std::string>& members) {
  std::vector<bool> covered(tree.vertex_count(), false);
  for (const auto& label : members) {
    const VertexId v = tree.id_of(label);
    covered[v] = true;
    for (VertexId w : tree.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace dominion::oracle
