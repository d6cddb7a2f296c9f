#pragma once

#include <optional>
#include <vector>

#include "necklace/word.hpp"

namespace necklace {

// 1 - |A ∩ B| / N^2 where A and B are the multisets of all N^2 cyclic subwords
// (every size vector at every position) of the two words.
Ratio overlap_distance(const Word& a, const Word& b);

// Lexicographically least cyclic sequence of length q^order containing every
// word of length `order` exactly once.
Word de_bruijn_sequence(int q, int order);

struct CentreSet {
    std::vector<Word> centres;
    // Volume of the subword every necklace shares with some centre.
    int lambda = 0;
    // Size of that shared subword.
    SizeVec block;
    // Upper bound on the distance from any necklace to its nearest centre.
    Ratio bound = 1;
};

CentreSet k_centre_1d(int n, int q, int k);
CentreSet k_centre_multidim(const SizeVec& n, int q, int k);
// Line-based construction applies when q^{n_d} <= k * N / n_d.
bool k_centre_uses_lines(const SizeVec& n, int q, int k);

// 1 - M^2 / (2 N^2): distance bound for necklaces sharing a subword of size m.
Ratio shared_subword_bound(const SizeVec& n, const SizeVec& m);

// 1 - log_q(kN) / N, the distance no set of k centres can beat.
long double lower_bound(const SizeVec& n, int q, int k);
// Ratio between the de Bruijn construction's guarantee and the lower bound;
// empty when log_q(kN) >= N.
std::optional<long double> approx_ratio(const SizeVec& n, int q, int k);

}  // namespace necklace
