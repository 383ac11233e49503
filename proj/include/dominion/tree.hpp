#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dominion {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// An undirected tree over opaque string labels.
///
/// A Tree is validated once at construction (connected, acyclic, no
/// self-loops or duplicate edges) and is immutable afterwards. Copies share
/// the underlying storage, so passing trees by value is cheap.
///
/// Vertices are addressed by dense ids in [0, vertex_count()); ids follow the
/// order in which labels were supplied.
class Tree {
 public:
  /// Builds a tree from labels and label pairs. Edge endpoints must already
  /// appear in `labels`.
  static Tree from_labeled_edges(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::string, std::string>>& edges);

  /// Builds a tree from labels and id pairs. Used by the generators.
  static Tree from_indexed_edges(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return data_->labels.size(); }
  std::size_t edge_count() const noexcept { return data_->edges.size(); }

  const std::string& label(VertexId v) const { return data_->labels[v]; }
  std::span<const std::string> labels() const noexcept { return data_->labels; }
  std::span<const Edge> edges() const noexcept { return data_->edges; }

  std::optional<VertexId> find(std::string_view label) const;
  /// Like find() but throws Error(UnknownVertex).
  VertexId id_of(std::string_view label) const;

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {data_->adjacency.data() + data_->offsets[v],
            data_->adjacency.data() + data_->offsets[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept {
    return data_->offsets[v + 1] - data_->offsets[v];
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::vector<std::size_t> offsets;  // CSR adjacency, size vertex_count + 1
    std::vector<VertexId> adjacency;
    std::unordered_map<std::string, VertexId> index;
  };
  static Tree build(std::vector<std::string> labels, std::vector<Edge> edges);

  explicit Tree(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// A tree with a designated root. Children of every vertex are ordered by
/// label, and postorder lists every child before its parent.
class RootedTree {
 public:
  RootedTree(Tree base, VertexId root);

  const Tree& base() const noexcept { return base_; }
  VertexId root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return base_.vertex_count(); }

  std::optional<VertexId> parent(VertexId v) const;
  std::span<const VertexId> children(VertexId v) const noexcept {
    return {children_.data() + child_offsets_[v], children_.data() + child_offsets_[v + 1]};
  }
  std::span<const VertexId> postorder() const noexcept { return postorder_; }

 private:
  static constexpr VertexId kNoParent = static_cast<VertexId>(-1);

  Tree base_;
  VertexId root_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offsets_;
  std::vector<VertexId> children_;
  std::vector<VertexId> postorder_;
};

/// Edge-list text format:
///
///   # comment
///   vertices: a b c      (optional, first non-comment line)
///   a b
///   b c
///
/// Labels are whitespace-free tokens and are preserved verbatim.
Tree parse_edge_list(std::string_view text);

/// Header listing every label in sorted order, then one edge per line with
/// endpoints and lines sorted lexicographically.
std::string to_edge_list(const Tree& tree);

RootedTree root_at(const Tree& tree, std::string_view root_label);
RootedTree root_at(const Tree& tree, VertexId root);

/// Labels of all vertices of degree <= 1, sorted.
std::vector<std::string> leaves(const Tree& tree);

}  // namespace dominion
