#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "necklace/numtheory.hpp"
#include "necklace/ring.hpp"
#include "necklace/word.hpp"

namespace necklace {

// Counts words x fixed by a translation subgroup H whose necklace
// representative is smaller than a reference word w (any word of the same
// size).  Words fixed by H are determined by their first e slices y, where e
// generates the projection of H onto the last coordinate; the later slices are
// images of y under a fixed cross-section translation sigma.  A necklace
// representative >= w then corresponds to a cyclic reading of y that never
// drops below the prefix of w, which a small matching automaton tracks.
struct BelowPlan {
    SizeVec cross;
    int m = 1;
    int e = 1;
    int scale = 1;
    Subgroup K;
    bool wrap_less = false;

    // Distinct slice classes of the prefix, ascending.
    std::vector<std::vector<uint8_t>> classes;
    // Slices fixed by K lying in the orbit of some prefix class.
    std::vector<std::vector<uint8_t>> specials;
    std::vector<int> special_class;
    std::vector<int> sigma;

    int states = 1;
    // trans[state * specials + letter] = next state, -1 on a violation.
    std::vector<int> trans;
    std::vector<char> trans_full;
    std::vector<int> state_max;
};

std::shared_ptr<const BelowPlan> below_plan(const SizeVec& n, const Subgroup& h,
                                            const std::vector<uint8_t>& w);
std::string below_key(const SizeVec& n, const Subgroup& h, const std::vector<uint8_t>& w);
void clear_below_caches();

template <class Ring>
typename Ring::T count_below(const Ring& ring, const SizeVec& n, const Subgroup& h,
                             const std::vector<uint8_t>& w);

namespace detail {

template <class Ring>
std::unordered_map<std::string, typename Ring::T>& below_memo() {
    static std::unordered_map<std::string, typename Ring::T> memo;
    return memo;
}

template <class Ring>
typename Ring::T count_below_uncached(const Ring& ring, const SizeVec& n, const Subgroup& h,
                                      const std::vector<uint8_t>& w) {
    using T = typename Ring::T;
    auto plan = below_plan(n, h, w);
    const BelowPlan& P = *plan;
    Ring rs = ring.scaled(P.scale);

    int crossN = static_cast<int>(volume(P.cross));
    int ksize = static_cast<int>(P.K.size());
    T fixed = rs.fixed_total(crossN / ksize, ksize);

    int S = P.states;
    int A = static_cast<int>(P.specials.size());
    int C = static_cast<int>(P.classes.size());

    std::vector<T> wt(A);
    for (int a = 0; a < A; ++a) wt[a] = rs.letter(P.specials[a]);

    std::vector<T> generic(C);
    for (int r = 0; r < C; ++r) {
        T below = P.cross.empty() ? rs.symbols_below(P.classes[r][0])
                                  : count_below(rs, P.cross, P.K, P.classes[r]);
        T g = fixed - below;
        for (int a = 0; a < A; ++a)
            if (P.special_class[a] >= r) g = g - wt[a];
        generic[r] = g;
    }

    T total = rs.one();
    for (int t = 0; t < P.e; ++t) total = rs.mul(total, fixed);

    T violating_free = rs.zero();
    T full_hits = rs.zero();
    size_t cells = static_cast<size_t>(S) * S * 2;
    std::vector<T> dp(cells, rs.zero()), nd(cells, rs.zero());
    std::vector<char> live(cells, 0), nlive(cells, 0);
    auto at = [S](int a, int b, int f) { return (static_cast<size_t>(a) * S + b) * 2 + f; };

    for (int guess = 0; guess < S; ++guess) {
        std::fill(live.begin(), live.end(), 0);
        for (size_t i = 0; i < cells; ++i) dp[i] = rs.zero();
        dp[at(0, guess, 0)] = rs.one();
        live[at(0, guess, 0)] = 1;
        for (int t = 0; t < P.e; ++t) {
            for (size_t i = 0; i < cells; ++i)
                if (nlive[i]) {
                    nd[i] = rs.zero();
                    nlive[i] = 0;
                }
            for (int s1 = 0; s1 < S; ++s1)
                for (int s2 = 0; s2 < S; ++s2)
                    for (int f = 0; f < 2; ++f) {
                        size_t i = at(s1, s2, f);
                        if (!live[i]) continue;
                        const T& cnt = dp[i];
                        if (rs.is_zero(cnt)) continue;
                        for (int a = 0; a < A; ++a) {
                            int n1 = P.trans[static_cast<size_t>(s1) * A + a];
                            if (n1 < 0) continue;
                            int b = P.sigma[a];
                            int n2 = P.trans[static_cast<size_t>(s2) * A + b];
                            if (n2 < 0) continue;
                            int nf = f | P.trans_full[static_cast<size_t>(s1) * A + a] |
                                     P.trans_full[static_cast<size_t>(s2) * A + b];
                            size_t j = at(n1, n2, nf);
                            nd[j] = nd[j] + rs.mul(cnt, wt[a]);
                            nlive[j] = 1;
                        }
                        int M = std::max(P.state_max[s1], P.state_max[s2]);
                        if (!rs.is_zero(generic[M])) {
                            size_t j = at(0, 0, f);
                            nd[j] = nd[j] + rs.mul(cnt, generic[M]);
                            nlive[j] = 1;
                        }
                    }
            std::swap(dp, nd);
            std::swap(live, nlive);
        }
        for (int s2 = 0; s2 < S; ++s2)
            for (int f = 0; f < 2; ++f) {
                size_t i = at(guess, s2, f);
                if (!live[i]) continue;
                violating_free = violating_free + dp[i];
                if (f) full_hits = full_hits + dp[i];
            }
        for (size_t i = 0; i < cells; ++i)
            if (nlive[i]) {
                nd[i] = rs.zero();
                nlive[i] = 0;
            }
    }

    T result = total - violating_free;
    if (P.wrap_less) result = result + full_hits;
    return ring.lift(result, P.scale);
}

}  // namespace detail

template <class Ring>
typename Ring::T count_below(const Ring& ring, const SizeVec& n, const Subgroup& h,
                             const std::vector<uint8_t>& w) {
    auto& memo = detail::below_memo<Ring>();
    std::string key = ring.id() + "#" + below_key(n, h, w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto r = detail::count_below_uncached(ring, n, h, w);
    if (memo.size() > (1u << 18)) memo.clear();
    memo.emplace(std::move(key), r);
    return r;
}

}  // namespace necklace
