#include "dominion/families.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>
#include <unordered_set>

#include "dominion/error.hpp"
#include "dominion/rng.hpp"

namespace dominion::families {

namespace {

// Keeps every generated vertex count well inside VertexId.
constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidParameter, message);
}

std::string path_label(std::uint64_t i) { return "v" + std::to_string(i); }

/// Path v1..vn occupying ids 0..n-1.
void append_path(std::uint64_t n, std::vector<std::string>& labels, std::vector<Edge>& edges) {
  for (std::uint64_t i = 1; i <= n; ++i) labels.push_back(path_label(i));
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
}

void append_pendant(VertexId host, std::string label, std::vector<std::string>& labels,
                    std::vector<Edge>& edges) {
  edges.emplace_back(host, static_cast<VertexId>(labels.size()));
  labels.push_back(std::move(label));
}

}  // namespace

Tree make_path(std::uint64_t n) {
  require(n >= 1, "path needs n >= 1");
  require(n < kMaxVertices, "path too large");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  append_path(n, labels, edges);
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

Tree make_uniform_pendant(std::uint64_t n, std::uint64_t r) {
  require(n >= 1 && r >= 1, "uniform pendant tree needs n >= 1 and r >= 1");
  require(n < kMaxVertices && r < kMaxVertices && n * (r + 1) < kMaxVertices,
          "uniform pendant tree too large");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  labels.reserve(n * (r + 1));
  append_path(n, labels, edges);
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = 1; j <= r; ++j) {
      append_pendant(static_cast<VertexId>(i - 1), "l" + std::to_string(i) + "_" + std::to_string(j),
                     labels, edges);
    }
  }
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

Tree make_comb(std::uint64_t n) { return make_uniform_pendant(n, 1); }

Tree make_interior_pendant(std::uint64_t n) {
  require(n >= 2, "interior pendant tree needs n >= 2");
  require(n < kMaxVertices / 2, "interior pendant tree too large");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  append_path(n, labels, edges);
  for (std::uint64_t i = 2; i < n; ++i) {
    append_pendant(static_cast<VertexId>(i - 1), "l" + std::to_string(i), labels, edges);
  }
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

Tree make_alternating(std::uint64_t n, Parity parity) {
  require(n >= 2, "alternating comb needs n >= 2");
  require(n < kMaxVertices / 2, "alternating comb too large");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  append_path(n, labels, edges);
  for (std::uint64_t i = parity == Parity::even ? 2 : 1; i <= n; i += 2) {
    append_pendant(static_cast<VertexId>(i - 1), "l" + std::to_string(i), labels, edges);
  }
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

Tree make_star(std::uint64_t m) {
  require(m >= 1, "star needs m >= 1");
  require(m < kMaxVertices, "star too large");
  std::vector<std::string> labels{"c"};
  std::vector<Edge> edges;
  for (std::uint64_t i = 1; i <= m; ++i) append_pendant(0, "u" + std::to_string(i), labels, edges);
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

std::string binary_label(std::uint64_t heap_index) { return "b" + std::to_string(heap_index); }

std::uint64_t binary_heap_index(std::string_view label) noexcept {
  if (label.size() < 2 || label.front() != 'b' || label[1] == '0') return 0;
  std::uint64_t value = 0;
  const auto* first = label.data() + 1;
  const auto* last = label.data() + label.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return 0;
  return value;
}

Tree make_complete_binary(std::uint64_t h) {
  require(h >= 1, "complete binary tree needs h >= 1");
  require(h <= 30, "complete binary tree height must be at most 30");
  const std::uint64_t count = (std::uint64_t{1} << (h + 1)) - 1;
  std::vector<std::string> labels;
  labels.reserve(count);
  std::vector<Edge> edges;
  edges.reserve(count - 1);
  for (std::uint64_t k = 1; k <= count; ++k) {
    labels.push_back(binary_label(k));
    if (k > 1) edges.emplace_back(static_cast<VertexId>(k / 2 - 1), static_cast<VertexId>(k - 1));
  }
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

Tree delete_leaves(const Tree& tree, const std::vector<std::string>& deleted) {
  std::vector<bool> removed(tree.vertex_count(), false);
  std::size_t removed_count = 0;
  for (const auto& label : deleted) {
    const VertexId v = tree.id_of(label);
    if (tree.degree(v) > 1) throw Error(ErrorKind::NotALeaf, "'" + label + "' is not a leaf");
    if (!removed[v]) {
      removed[v] = true;
      ++removed_count;
    }
  }
  if (removed_count == tree.vertex_count()) {
    throw Error(ErrorKind::WouldBeEmpty, "deleting every vertex leaves an empty tree");
  }

  std::vector<VertexId> remap(tree.vertex_count());
  std::vector<std::string> labels;
  labels.reserve(tree.vertex_count() - removed_count);
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (removed[v]) continue;
    remap[v] = static_cast<VertexId>(labels.size());
    labels.push_back(tree.label(v));
  }
  std::vector<Edge> edges;
  edges.reserve(labels.size() - 1);
  for (const auto& [a, b] : tree.edges()) {
    if (!removed[a] && !removed[b]) edges.emplace_back(remap[a], remap[b]);
  }
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

Tree random_tree(std::uint64_t n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  require(n < kMaxVertices, "random tree too large");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n <= 2) return Tree::from_indexed_edges(std::move(labels), std::move(edges));

  SeededRng rng(seed);
  std::vector<VertexId> code(n - 2);
  for (auto& x : code) x = static_cast<VertexId>(rng.uniform_index(n));

  // Linear-time Pruefer decoding.
  std::vector<std::uint64_t> degree(n, 1);
  for (VertexId x : code) ++degree[x];
  VertexId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  VertexId leaf = ptr;
  edges.reserve(n - 1);
  for (VertexId x : code) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, static_cast<VertexId>(n - 1));
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

}  // namespace dominion::families
