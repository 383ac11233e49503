#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dominion/big_count.hpp"

namespace dominion::perturbation {

/// Effect of deleting a set X of bottom-level leaves from T_h.
struct LeafDeletionReport {
  std::uint64_t h = 0;
  std::vector<std::string> deleted;  // X, sorted by heap index
  std::uint64_t m1 = 0;
  BigCount gamma_before;
  BigCount gamma_after;
  BigCount zeta_before;
  BigCount zeta_after;
  BigCount envelope;  // 2^m1 * zeta_before
  bool bound_holds = false;

  friend bool operator==(const LeafDeletionReport&, const LeafDeletionReport&) = default;
};

/// Number of level-(h-1) vertices of T_h with exactly one child in X.
/// Throws Error(NotALevelHLeaf) if some label is not a level-h vertex.
std::uint64_t m1_of(std::uint64_t h, const std::vector<std::string>& deleted);

/// Before-values from the binary-tree closed form, after-values from the
/// tree DP on T_h - X. Requires h >= 2 and X a proper subset of level h.
LeafDeletionReport analyze_deletion(std::uint64_t h, const std::vector<std::string>& deleted);

/// One report per leaf of level h, in heap order.
std::vector<LeafDeletionReport> single_leaf_reports(std::uint64_t h);

/// True iff deleting any single leaf of level h keeps gamma and doubles zeta.
bool single_leaf_doubling_check(std::uint64_t h);

/// `size` distinct level-h labels drawn with SeededRng(seed), sorted by heap index.
std::vector<std::string> random_deletion_set(std::uint64_t h, std::uint64_t size, std::uint64_t seed);

/// CSV columns: h,X,m1,gamma_before,gamma_after,zeta_before,zeta_after,envelope,holds
/// X is written as labels joined by '+'.
std::string csv_header();
std::string to_csv_row(const LeafDeletionReport& report);
LeafDeletionReport parse_csv_row(const std::string& line);

}  // namespace dominion::perturbation
