#pragma once

#include <vector>

#include "necklace/word.hpp"

namespace necklace {

long long totient(long long n);
int mobius(long long n);
std::vector<int> divisors(int n);
// Every divisor vector f with f_i | n_i, in index order (first coordinate fastest).
std::vector<SizeVec> divisor_vectors(const SizeVec& n);
BigInt power(const BigInt& base, long long exp);
// N! / prod(parts_i!) with sum(parts) == N.
BigInt multinomial(const std::vector<long long>& parts);

// Subgroups of Z_{n_1} x ... x Z_{n_d}, stored as sorted translation indices.
using Subgroup = std::vector<int>;

Subgroup closure(const std::vector<int>& generators, const Shape& shape);
Subgroup cyclic_subgroup(int g, const Shape& shape);
// Subgroup generated by f_i * e_i: the words fixed by it are tilings of size f.
Subgroup tiling_subgroup(const SizeVec& f, const SizeVec& n);
// All subgroups contained in `ambient` (itself a subgroup).
std::vector<Subgroup> subgroups_within(const Subgroup& ambient, const Shape& shape);
// Elements whose order is squarefree; every subgroup with nonzero Mobius value lies here.
Subgroup squarefree_elements(const Shape& shape);
// Mobius function of the subgroup lattice between the trivial group and H.
long long subgroup_mobius(const Subgroup& h, const Shape& shape);

}  // namespace necklace
