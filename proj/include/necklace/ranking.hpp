#pragma once

#include <vector>

#include "necklace/numtheory.hpp"
#include "necklace/word.hpp"

namespace necklace {

// Zero-based ranks: the number of strictly smaller objects.
struct RankResult {
    BigInt rn;  // among all necklaces
    BigInt rl;  // among Lyndon (aperiodic) necklaces
    BigInt ra;  // among atranslational necklaces
};

// Requires w to be a necklace representative.
RankResult rank_necklace(const Word& w);

// Number of necklaces whose representative is smaller than w; w may be any word.
BigInt rank_any(const Word& w);
BigInt rank_lyndon_any(const Word& w);
BigInt rank_atranslational_any(const Word& w);

// Number of words of size n fixed by every translation in h whose necklace
// representative is smaller than w.
BigInt count_fixed_below(const Word& w, const Subgroup& h);

// Words of size f (f_i | n_i) whose representative, tiled up to w's size, is below w.
BigInt count_T(const Word& w, const SizeVec& f);

// Rank of w among necklaces with content p (requires w canonical and parikh(w) == p).
BigInt rank_fixed_content(const Word& w, const std::vector<int>& p);
// Number of content-p necklaces whose representative is smaller than w (any w).
BigInt rank_fixed_content_any(const Word& w, const std::vector<int>& p);

BigInt to_big(__int128 v);

}  // namespace necklace
