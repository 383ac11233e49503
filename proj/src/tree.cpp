#include "dominion/tree.hpp"

#include <algorithm>
#include <numeric>

#include "dominion/error.hpp"

namespace dominion {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// False if a and b were already connected.
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::size_t> size_;
};

bool is_label_char_ok(char ch) {
  return ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r' && ch != '\v' && ch != '\f';
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\v\f");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && !is_label_char_ok(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && is_label_char_ok(s[j])) ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Tree Tree::build(std::vector<std::string> labels, std::vector<Edge> edges) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::Empty, "a tree needs at least one vertex");
  if (n > static_cast<std::size_t>(static_cast<VertexId>(-1)) - 1) {
    throw Error(ErrorKind::InvalidParameter, "too many vertices");
  }

  auto data = std::make_shared<Data>();
  data->index.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    const std::string& label = labels[v];
    if (label.empty() || !std::all_of(label.begin(), label.end(), is_label_char_ok)) {
      throw Error(ErrorKind::ParseError, "invalid label '" + label + "'");
    }
    if (!data->index.emplace(label, v).second) {
      throw Error(ErrorKind::ParseError, "duplicate label '" + label + "'");
    }
  }

  DisjointSets components(n);
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    if (a == b) throw Error(ErrorKind::NotATree, "self-loop at '" + labels[a] + "'");
    if (!components.unite(a, b)) {
      throw Error(ErrorKind::NotATree,
                  "edge {" + labels[a] + ", " + labels[b] + "} closes a cycle or repeats an edge");
    }
    ++degree[a];
    ++degree[b];
  }
  if (edges.size() != n - 1) {
    throw Error(ErrorKind::NotATree, "graph is disconnected (" + std::to_string(n) +
                                         " vertices, " + std::to_string(edges.size()) + " edges)");
  }

  data->offsets.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) data->offsets[v + 1] = data->offsets[v] + degree[v];
  data->adjacency.resize(2 * edges.size());
  std::vector<std::size_t> cursor(data->offsets.begin(), data->offsets.end() - 1);
  for (const auto& [a, b] : edges) {
    data->adjacency[cursor[a]++] = b;
    data->adjacency[cursor[b]++] = a;
  }
  data->labels = std::move(labels);
  data->edges = std::move(edges);
  return Tree(std::move(data));
}

Tree Tree::from_indexed_edges(std::vector<std::string> labels, std::vector<Edge> edges) {
  return build(std::move(labels), std::move(edges));
}

Tree Tree::from_labeled_edges(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> index;
  index.reserve(labels.size());
  for (VertexId v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return build(std::move(labels), std::move(indexed));
}

std::optional<VertexId> Tree::find(std::string_view label) const {
  const auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

VertexId Tree::id_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
}

RootedTree::RootedTree(Tree base, VertexId root) : base_(std::move(base)), root_(root) {
  const std::size_t n = base_.vertex_count();
  if (root >= n) throw Error(ErrorKind::UnknownVertex, "root id out of range");

  parent_.assign(n, kNoParent);
  std::vector<VertexId> order;
  order.reserve(n);
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    for (VertexId w : base_.neighbors(v)) {
      if (w == root || parent_[w] != kNoParent) continue;
      parent_[w] = v;
      order.push_back(w);
    }
  }

  child_offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    child_offsets_[v + 1] = child_offsets_[v] + base_.degree(v) - (v == root ? 0 : 1);
  }
  children_.resize(n - 1);
  for (VertexId v = 0; v < n; ++v) {
    auto out = children_.begin() + static_cast<std::ptrdiff_t>(child_offsets_[v]);
    auto first = out;
    for (VertexId w : base_.neighbors(v)) {
      if (w != parent_[v]) *out++ = w;
    }
    std::sort(first, out, [this](VertexId a, VertexId b) { return base_.label(a) < base_.label(b); });
  }

  postorder_.reserve(n);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = children(v);
    if (next < kids.size()) {
      const VertexId child = kids[next++];
      stack.emplace_back(child, 0);
    } else {
      postorder_.push_back(v);
      stack.pop_back();
    }
  }
}

std::optional<VertexId> RootedTree::parent(VertexId v) const {
  if (parent_[v] == kNoParent) return std::nullopt;
  return parent_[v];
}

Tree parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.emplace(std::string(token), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  bool seen_content = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    constexpr std::string_view kHeader = "vertices:";
    if (line.starts_with(kHeader)) {
      if (seen_content) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": 'vertices:' header must come first");
      }
      seen_content = true;
      for (auto token : split_ws(line.substr(kHeader.size()))) {
        if (index.contains(std::string(token))) {
          throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                                 ": duplicate label '" + std::string(token) + "'");
        }
        intern(token);
      }
      continue;
    }
    seen_content = true;

    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                             ": expected two labels, got " +
                                             std::to_string(tokens.size()));
    }
    const VertexId a = intern(tokens[0]);
    const VertexId b = intern(tokens[1]);
    edges.emplace_back(a, b);
  }

  if (labels.empty()) throw Error(ErrorKind::Empty, "no vertices declared");
  return Tree::from_indexed_edges(std::move(labels), std::move(edges));
}

std::string to_edge_list(const Tree& tree) {
  std::vector<std::string_view> labels(tree.labels().begin(), tree.labels().end());
  std::sort(labels.begin(), labels.end());

  std::vector<std::pair<std::string_view, std::string_view>> edges;
  edges.reserve(tree.edge_count());
  for (const auto& [a, b] : tree.edges()) {
    std::string_view la = tree.label(a);
    std::string_view lb = tree.label(b);
    if (lb < la) std::swap(la, lb);
    edges.emplace_back(la, lb);
  }
  std::sort(edges.begin(), edges.end());

  std::string out = "vertices:";
  for (auto label : labels) {
    out += ' ';
    out += label;
  }
  out += '\n';
  for (const auto& [a, b] : edges) {
    out += a;
    out += ' ';
    out += b;
    out += '\n';
  }
  return out;
}

RootedTree root_at(const Tree& tree, std::string_view root_label) {
  return RootedTree(tree, tree.id_of(root_label));
}

RootedTree root_at(const Tree& tree, VertexId root) { return RootedTree(tree, root); }

std::vector<std::string> leaves(const Tree& tree) {
  std::vector<std::string> out;
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) <= 1) out.push_back(tree.label(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dominion
