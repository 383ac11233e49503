#include "dominion/family_spec.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

#include "dominion/error.hpp"
#include "dominion/families.hpp"

namespace dominion {

namespace {

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  std::string_view size_key;  // "n", "m", or "h"
};

constexpr std::array<KindInfo, 9> kKinds{{
    {FamilyKind::uniform_pendant, "uniform", "n"},
    {FamilyKind::comb, "comb", "n"},
    {FamilyKind::interior_pendant, "interior", "n"},
    {FamilyKind::alternating_even, "alt-even", "n"},
    {FamilyKind::alternating_odd, "alt-odd", "n"},
    {FamilyKind::star, "star", "m"},
    {FamilyKind::path, "path", "n"},
    {FamilyKind::complete_binary, "binary", "h"},
    {FamilyKind::random, "random", "n"},
}};

const KindInfo& info_for(FamilyKind kind) {
  return *std::find_if(kKinds.begin(), kKinds.end(), [kind](const KindInfo& k) { return k.kind == kind; });
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "family '" + std::string(text) + "': " + why);
}

std::uint64_t parse_uint(std::string_view text, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    fail(text, "'" + std::string(value) + "' is not a nonnegative integer");
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(sep, start);
    parts.emplace_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(text, "expected '<kind>:<key>=<value>,...'");
  const auto name = text.substr(0, colon);
  const auto it = std::find_if(kKinds.begin(), kKinds.end(), [name](const KindInfo& k) { return k.name == name; });
  if (it == kKinds.end()) fail(text, "unknown family kind '" + std::string(name) + "'");

  std::map<std::string, std::string, std::less<>> params;
  for (const auto& item : split(text.substr(colon + 1), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(text, "parameter '" + item + "' lacks '='");
    if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
      fail(text, "repeated parameter '" + item.substr(0, eq) + "'");
    }
  }

  FamilySpec spec;
  spec.kind = it->kind;
  auto take = [&](std::string_view key) -> std::optional<std::string> {
    const auto found = params.find(key);
    if (found == params.end()) return std::nullopt;
    std::string value = found->second;
    params.erase(found);
    return value;
  };
  auto take_required = [&](std::string_view key) {
    const auto value = take(key);
    if (!value) fail(text, "missing parameter '" + std::string(key) + "'");
    return parse_uint(text, *value);
  };

  const std::uint64_t size = take_required(it->size_key);
  if (spec.kind == FamilyKind::complete_binary) {
    spec.h = size;
    if (const auto deleted = take("delete")) {
      spec.deleted_leaves = split(*deleted, '+');
      for (const auto& label : spec.deleted_leaves) {
        if (label.empty()) fail(text, "empty label in delete list");
      }
    }
  } else {
    spec.n = size;
  }
  if (spec.kind == FamilyKind::uniform_pendant) spec.r = take_required("r");
  if (spec.kind == FamilyKind::random) spec.seed = take_required("seed");

  if (!params.empty()) fail(text, "unexpected parameter '" + params.begin()->first + "'");
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  const auto& info = info_for(spec.kind);
  std::string out(info.name);
  out += ':';
  out += info.size_key;
  out += '=';
  out += std::to_string(spec.kind == FamilyKind::complete_binary ? spec.h.value_or(0) : spec.n.value_or(0));
  if (spec.r) out += ",r=" + std::to_string(*spec.r);
  if (spec.seed) out += ",seed=" + std::to_string(*spec.seed);
  if (!spec.deleted_leaves.empty()) {
    out += ",delete=";
    for (std::size_t i = 0; i < spec.deleted_leaves.size(); ++i) {
      if (i) out += '+';
      out += spec.deleted_leaves[i];
    }
  }
  return out;
}

Tree make_tree(const FamilySpec& spec) {
  using namespace families;
  auto need = [](const std::optional<std::uint64_t>& value, const char* name) {
    if (!value) throw Error(ErrorKind::InvalidParameter, std::string("missing parameter ") + name);
    return *value;
  };
  switch (spec.kind) {
    case FamilyKind::uniform_pendant: return make_uniform_pendant(need(spec.n, "n"), need(spec.r, "r"));
    case FamilyKind::comb: return make_comb(need(spec.n, "n"));
    case FamilyKind::interior_pendant: return make_interior_pendant(need(spec.n, "n"));
    case FamilyKind::alternating_even: return make_alternating(need(spec.n, "n"), Parity::even);
    case FamilyKind::alternating_odd: return make_alternating(need(spec.n, "n"), Parity::odd);
    case FamilyKind::star: return make_star(need(spec.n, "m"));
    case FamilyKind::path: return make_path(need(spec.n, "n"));
    case FamilyKind::random: return random_tree(need(spec.n, "n"), need(spec.seed, "seed"));
    case FamilyKind::complete_binary: {
      const std::uint64_t h = need(spec.h, "h");
      Tree tree = make_complete_binary(h);
      if (spec.deleted_leaves.empty()) return tree;
      const std::uint64_t first = std::uint64_t{1} << h;
      for (const auto& label : spec.deleted_leaves) {
        const std::uint64_t k = binary_heap_index(label);
        if (k < first || k >= 2 * first) {
          throw Error(ErrorKind::NotALevelHLeaf, "'" + label + "' is not on level " + std::to_string(h));
        }
      }
      return delete_leaves(tree, spec.deleted_leaves);
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unhandled family kind");
}

}  // namespace dominion
