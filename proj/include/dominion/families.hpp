#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dominion/tree.hpp"

namespace dominion::families {

enum class Parity { even, odd };

/// P_n on "v1".."vn".
Tree make_path(std::uint64_t n);

/// G(n, r): path v1..vn with r pendants "li_j" hung on every vi.
Tree make_uniform_pendant(std::uint64_t n, std::uint64_t r);

/// Full comb G_n, i.e. G(n, 1).
Tree make_comb(std::uint64_t n);

/// G'_n: path v1..vn with one pendant "li" on each internal vertex v2..v(n-1).
Tree make_interior_pendant(std::uint64_t n);

/// E_n (pendant "li" on every even-indexed vi) or O_n (odd-indexed).
Tree make_alternating(std::uint64_t n, Parity parity);

/// K_{1,m}: center "c", leaves "u1".."um".
Tree make_star(std::uint64_t m);

/// T_h with heap labels: "b1" is the root and bk has children b(2k), b(2k+1).
Tree make_complete_binary(std::uint64_t h);

std::string binary_label(std::uint64_t heap_index);
/// Inverse of binary_label; 0 when the label is not of the form "b<k>".
std::uint64_t binary_heap_index(std::string_view label) noexcept;

/// Induced subtree on V \ X. Every element of X must be a leaf of `tree`.
Tree delete_leaves(const Tree& tree, const std::vector<std::string>& deleted);

/// Uniformly random labeled tree on "0".."n-1", decoded from a Pruefer
/// sequence drawn from SeededRng(seed).
Tree random_tree(std::uint64_t n, std::uint64_t seed);

}  // namespace dominion::families
