#include "dominion/dp_counter.hpp"

#include <vector>

namespace dominion::dp {

StateValue min_merge(const StateValue& a, const StateValue& b) {
  if (a.size < b.size) return a;
  if (b.size < a.size) return b;
  return {a.size, a.count + b.count};
}

StateValue product(const StateValue& a, const StateValue& b) {
  const Size size = a.size + b.size;
  if (size.is_infinite()) return {};
  return {size, a.count * b.count};
}

DpState leaf_state() { return combine_children({}); }

DpState combine_children(std::span<const DpState> children) {
  StateValue selected{Size::finite(1), 1};
  // Children each selected or dominated, at least one selected.
  StateValue some_selected;
  // Children all dominated (and none selected).
  StateValue all_dominated{Size::finite(0), 1};

  for (const DpState& child : children) {
    const StateValue covered = min_merge(child.selected, child.dominated);
    selected = product(selected, min_merge(covered, child.needy));
    some_selected = min_merge(product(some_selected, covered), product(all_dominated, child.selected));
    all_dominated = product(all_dominated, child.dominated);
  }
  return {std::move(selected), std::move(some_selected), std::move(all_dominated)};
}

DominationSummary root_summary(const DpState& root) {
  const StateValue best = min_merge(root.selected, root.dominated);
  return {BigCount(best.size.value()), best.count};
}

DominationSummary dp_count(const RootedTree& tree) {
  // Postorder places the children of v, in order, on top of the stack just
  // before v is reached.
  std::vector<DpState> stack;
  for (VertexId v : tree.postorder()) {
    const std::size_t k = tree.children(v).size();
    DpState state = combine_children(std::span<const DpState>(stack).last(k));
    stack.resize(stack.size() - k);
    stack.push_back(std::move(state));
  }
  return root_summary(stack.back());
}

DominationSummary dp_count(const Tree& tree) { return dp_count(RootedTree(tree, 0)); }

}  // namespace dominion::dp
