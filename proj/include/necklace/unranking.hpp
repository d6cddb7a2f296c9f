#pragma once

#include <vector>

#include "necklace/word.hpp"

namespace necklace {

// Number of necklaces of size n over q symbols whose representative starts
// with the slices of `prefix` (size n with a shorter last dimension).
BigInt prefix_count(const Word& prefix, const SizeVec& n);
BigInt prefix_count_fixed_content(const Word& prefix, const SizeVec& n, const std::vector<int>& p);

// Necklace representative of zero-based rank i.
Word unrank(const BigInt& i, const SizeVec& n, int q);
// Representative of rank i among necklaces with content p (q = p.size()).
Word unrank_fixed_content(const BigInt& i, const SizeVec& n, const std::vector<int>& p);

}  // namespace necklace
