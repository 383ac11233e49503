#pragma once

#include <compare>
#include <cstdint>
#include <span>

#include "dominion/big_count.hpp"
#include "dominion/tree.hpp"

namespace dominion::dp {

/// Minimum set size for a state, or infinity when the state is infeasible.
class Size {
 public:
  static constexpr Size infinity() noexcept { return Size(); }
  static constexpr Size finite(std::uint64_t value) noexcept { return Size(value); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful when finite.
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr Size operator+(Size a, Size b) noexcept {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Size a, Size b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Size a, Size b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Size() noexcept = default;
  constexpr explicit Size(std::uint64_t value) noexcept : infinite_(false), value_(value) {}

  bool infinite_ = true;
  std::uint64_t value_ = 0;
};

/// Minimum size of a partial solution in one state, and how many partial
/// solutions attain it. count == 0 exactly when size is infinite.
struct StateValue {
  Size size = Size::infinity();
  BigCount count = 0;

  friend bool operator==(const StateValue&, const StateValue&) = default;
};

/// Per-vertex table for the subtree T_v rooted at v:
///   selected  - v is in the set;
///   dominated - v is not in the set but some child is;
///   needy     - v is not in the set and no child is, so v must be covered
///               by its parent. Every other vertex of T_v is dominated.
struct DpState {
  StateValue selected;
  StateValue dominated;
  StateValue needy;

  friend bool operator==(const DpState&, const DpState&) = default;
};

/// Keeps the smaller of two values; counts add on ties.
StateValue min_merge(const StateValue& a, const StateValue& b);
/// Independent combination: sizes add, counts multiply.
StateValue product(const StateValue& a, const StateValue& b);

DpState leaf_state();

/// State of a vertex given the states of all its children (in any order).
DpState combine_children(std::span<const DpState> children);

/// Only selected and dominated are admissible at the root.
DominationSummary root_summary(const DpState& root);

/// gamma and the exact number of minimum dominating sets, in one postorder
/// pass with constant work per edge.
DominationSummary dp_count(const RootedTree& tree);
/// Roots at vertex id 0.
DominationSummary dp_count(const Tree& tree);

}  // namespace dominion::dp
