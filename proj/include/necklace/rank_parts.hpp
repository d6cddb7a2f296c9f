#pragma once

#include <vector>

#include "necklace/word.hpp"

namespace necklace {

// Building blocks of the slice-partition view of ranking.  Slices of size f'
// (the first d-1 entries of f) are tiled up to w's cross-section before being
// compared with w's slices.  Slice indices are zero-based.

// Words u of size (f', i) whose first j slices equal w's and whose every
// suffix, under every cross-section translation, is strictly greater than the
// prefix of w of the same length.
BigInt beta(const Word& w, int i, int j, const SizeVec& f);
// The same count through the slice recursion
// beta(i, j) = ns(j) * beta(i - j - 1, 0) + beta(i, j + 1).
BigInt beta_recursive(const Word& w, int i, int j, const SizeVec& f);

// Slices of size f' greater than slice j of w.
BigInt ns(const Word& w, int j, const SizeVec& f);

// Distinct cross-section translates of the first j slices of w.
long long theta_count(const Word& w, int j);

// Lyndon representatives smaller than w that repeat w's leading block under a
// different cross-section shift.  Zero unless w is aperiodic but translational.
BigInt u_correction(const Word& w);

// Cross-section translations of order exactly n_d / l whose index is below g.
long long s_count(int g, int l, const SizeVec& n);

}  // namespace necklace
