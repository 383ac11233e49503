#include "dominion/perturbation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "dominion/closed_form.hpp"
#include "dominion/dp_counter.hpp"
#include "dominion/error.hpp"
#include "dominion/families.hpp"
#include "dominion/rng.hpp"

namespace dominion::perturbation {

namespace {

using families::binary_heap_index;
using families::binary_label;

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidParameter, message);
}

/// Distinct heap indices of X; every one must lie on level h.
std::set<std::uint64_t> level_h_indices(std::uint64_t h, const std::vector<std::string>& deleted) {
  require(h >= 1 && h <= 30, "height must be in [1, 30]");
  const std::uint64_t first = std::uint64_t{1} << h;
  std::set<std::uint64_t> indices;
  for (const auto& label : deleted) {
    const std::uint64_t k = binary_heap_index(label);
    if (k < first || k >= 2 * first) {
      throw Error(ErrorKind::NotALevelHLeaf, "'" + label + "' is not on level " + std::to_string(h));
    }
    indices.insert(k);
  }
  return indices;
}

std::vector<std::string> labels_of(const std::set<std::uint64_t>& indices) {
  std::vector<std::string> labels;
  labels.reserve(indices.size());
  for (std::uint64_t k : indices) labels.push_back(binary_label(k));
  return labels;
}

std::uint64_t count_single_losses(const std::set<std::uint64_t>& indices) {
  std::uint64_t m1 = 0;
  for (std::uint64_t k : indices) {
    if (!indices.contains(k ^ 1)) ++m1;
  }
  return m1;
}

LeafDeletionReport report_for(const Tree& full, std::uint64_t h, const DominationSummary& before,
                              const std::set<std::uint64_t>& indices) {
  LeafDeletionReport report;
  report.h = h;
  report.deleted = labels_of(indices);
  report.m1 = count_single_losses(indices);
  const DominationSummary after =
      dp::dp_count(report.deleted.empty() ? full : families::delete_leaves(full, report.deleted));
  report.gamma_before = before.gamma;
  report.zeta_before = before.zeta;
  report.gamma_after = after.gamma;
  report.zeta_after = after.zeta;
  report.envelope = pow2(report.m1) * before.zeta;
  report.bound_holds = report.zeta_after <= report.envelope;
  return report;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(sep, start);
    parts.push_back(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "not a nonnegative integer: '" + text + "'");
  }
  return value;
}

}  // namespace

std::uint64_t m1_of(std::uint64_t h, const std::vector<std::string>& deleted) {
  return count_single_losses(level_h_indices(h, deleted));
}

LeafDeletionReport analyze_deletion(std::uint64_t h, const std::vector<std::string>& deleted) {
  require(h >= 2, "leaf deletion analysis needs h >= 2");
  const auto indices = level_h_indices(h, deleted);
  require(indices.size() < (std::uint64_t{1} << h), "X must be a proper subset of the bottom level");
  return report_for(families::make_complete_binary(h), h, closed_form::binary_summary(h), indices);
}

std::vector<LeafDeletionReport> single_leaf_reports(std::uint64_t h) {
  require(h >= 2 && h <= 30, "single-leaf analysis needs h in [2, 30]");
  const Tree full = families::make_complete_binary(h);
  const DominationSummary before = closed_form::binary_summary(h);
  std::vector<LeafDeletionReport> reports;
  for (std::uint64_t k = std::uint64_t{1} << h; k < (std::uint64_t{1} << (h + 1)); ++k) {
    reports.push_back(report_for(full, h, before, {k}));
  }
  return reports;
}

bool single_leaf_doubling_check(std::uint64_t h) {
  const auto reports = single_leaf_reports(h);
  return std::all_of(reports.begin(), reports.end(), [](const LeafDeletionReport& r) {
    return r.gamma_after == r.gamma_before && r.zeta_after == 2 * r.zeta_before;
  });
}

std::vector<std::string> random_deletion_set(std::uint64_t h, std::uint64_t size, std::uint64_t seed) {
  require(h >= 1 && h <= 30, "height must be in [1, 30]");
  const std::uint64_t width = std::uint64_t{1} << h;
  require(size <= width, "cannot pick more leaves than level h holds");
  // Partial Fisher-Yates over level-h offsets.
  std::vector<std::uint64_t> offsets(width);
  std::iota(offsets.begin(), offsets.end(), std::uint64_t{0});
  SeededRng rng(seed);
  for (std::uint64_t i = 0; i < size; ++i) {
    const std::uint64_t j = i + rng.uniform_index(width - i);
    std::swap(offsets[i], offsets[j]);
  }
  std::set<std::uint64_t> indices;
  for (std::uint64_t i = 0; i < size; ++i) indices.insert(width + offsets[i]);
  return labels_of(indices);
}

std::string csv_header() {
  return "h,X,m1,gamma_before,gamma_after,zeta_before,zeta_after,envelope,holds";
}

std::string to_csv_row(const LeafDeletionReport& r) {
  std::string x;
  for (std::size_t i = 0; i < r.deleted.size(); ++i) {
    if (i) x += '+';
    x += r.deleted[i];
  }
  return std::to_string(r.h) + ',' + x + ',' + std::to_string(r.m1) + ',' + to_decimal(r.gamma_before) +
         ',' + to_decimal(r.gamma_after) + ',' + to_decimal(r.zeta_before) + ',' +
         to_decimal(r.zeta_after) + ',' + to_decimal(r.envelope) + ',' +
         (r.bound_holds ? "true" : "false");
}

LeafDeletionReport parse_csv_row(const std::string& line) {
  const auto fields = split(line, ',');
  if (fields.size() != 9) {
    throw Error(ErrorKind::ParseError, "expected 9 CSV fields, got " + std::to_string(fields.size()));
  }
  LeafDeletionReport r;
  r.h = parse_u64(fields[0]);
  if (!fields[1].empty()) r.deleted = split(fields[1], '+');
  r.m1 = parse_u64(fields[2]);
  r.gamma_before = parse_decimal(fields[3]);
  r.gamma_after = parse_decimal(fields[4]);
  r.zeta_before = parse_decimal(fields[5]);
  r.zeta_after = parse_decimal(fields[6]);
  r.envelope = parse_decimal(fields[7]);
  if (fields[8] != "true" && fields[8] != "false") {
    throw Error(ErrorKind::ParseError, "holds must be 'true' or 'false'");
  }
  r.bound_holds = fields[8] == "true";
  return r;
}

}  // namespace dominion::perturbation
