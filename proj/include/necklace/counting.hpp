#pragma once

#include <vector>

#include "necklace/numtheory.hpp"
#include "necklace/word.hpp"

namespace necklace {

BigInt count_necklaces(const SizeVec& n, int q);
BigInt count_lyndon(const SizeVec& n, int q);
// Necklaces whose representatives are fixed by no non-identity translation.
BigInt count_atranslational(const SizeVec& n, int q);

// Fixed content: p[a] is the number of cells holding symbol a + 1.
BigInt count_fc_necklaces(const SizeVec& n, const std::vector<int>& p);
BigInt count_fc_lyndon(const SizeVec& n, const std::vector<int>& p);
BigInt count_fc_atranslational(const SizeVec& n, const std::vector<int>& p);

// Cross-section translations of order exactly n_d / l.
BigInt g_set_size(int l, const SizeVec& n);
// The two recurrences used when building translational Lyndon words.
// Dimensions i are 1-based.
int i_func(int i, int l, const SizeVec& n);
BigInt h_func(int i, int l, const SizeVec& n, int d);

// Every Parikh vector of length q summing to total, in lexicographic order.
std::vector<std::vector<int>> parikh_vectors(int total, int q);
void check_content(const SizeVec& n, const std::vector<int>& p);

// Subgroup tables of Z_n shared by the counting and ranking code.
struct GroupTables {
    // Cyclic subgroups with their number of generators.
    std::vector<std::pair<Subgroup, long long>> cyclic;
    // Subgroups with nonzero Mobius value and that value.
    std::vector<std::pair<Subgroup, long long>> mobius;
    // Coefficients turning fixed-point counts into aperiodic counts, summed per subgroup.
    std::vector<std::pair<Subgroup, long long>> aperiodic;
};
const GroupTables& group_tables(const SizeVec& n);

}  // namespace necklace
