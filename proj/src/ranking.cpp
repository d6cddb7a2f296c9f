#include "necklace/ranking.hpp"

#include <cmath>

#include "necklace/below.hpp"
#include "necklace/counting.hpp"
#include "necklace/ring.hpp"

namespace necklace {

BigInt to_big(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<unsigned long long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long long>(u & ~0ULL);
    return neg ? BigInt(-r) : r;
}

namespace {

// Machine integers are exact while q^N stays well below 2^127.
bool small_enough(const Word& w) {
    return static_cast<double>(w.count()) * std::log2(static_cast<double>(std::max(w.q, 2))) < 120.0;
}

BigInt fixed_below(const Word& w, const Subgroup& h) {
    if (small_enough(w)) {
        CountRing<__int128> ring{w.q};
        return to_big(count_below(ring, w.size, h, w.cells));
    }
    CountRing<BigInt> ring{w.q};
    return count_below(ring, w.size, h, w.cells);
}

BigInt averaged(const Word& w, const std::vector<std::pair<Subgroup, long long>>& terms) {
    BigInt sum = 0;
    for (const auto& [h, c] : terms) sum += c * fixed_below(w, h);
    long long N = w.count();
    if (sum % N != 0) throw std::logic_error("rank sum not divisible by the group order");
    return sum / N;
}

void check_word(const Word& w) {
    check_size(w.size);
    if (w.q < 1) throw InvalidInput("alphabet size must be positive");
}

}  // namespace

BigInt count_fixed_below(const Word& w, const Subgroup& h) {
    check_word(w);
    return fixed_below(w, h);
}

BigInt rank_any(const Word& w) {
    check_word(w);
    return averaged(w, group_tables(w.size).cyclic);
}

BigInt rank_lyndon_any(const Word& w) {
    check_word(w);
    return averaged(w, group_tables(w.size).aperiodic);
}

BigInt rank_atranslational_any(const Word& w) {
    check_word(w);
    return averaged(w, group_tables(w.size).mobius);
}

RankResult rank_necklace(const Word& w) {
    check_word(w);
    if (!is_canonical(w)) throw InvalidInput("word is not a necklace representative");
    return {rank_any(w), rank_lyndon_any(w), rank_atranslational_any(w)};
}

BigInt count_T(const Word& w, const SizeVec& f) {
    check_word(w);
    if (f.size() != w.size.size()) throw InvalidInput("count_T: dimension mismatch");
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] < 1 || w.size[i] % f[i] != 0) throw InvalidInput("count_T: f must divide the size");
    return fixed_below(w, tiling_subgroup(f, w.size));
}

BigInt rank_fixed_content_any(const Word& w, const std::vector<int>& p) {
    check_word(w);
    check_content(w.size, p);
    if (static_cast<int>(p.size()) != w.q) throw InvalidInput("content length must equal the alphabet size");
    ContentRing ring(p);
    BigInt sum = 0;
    for (const auto& [h, c] : group_tables(w.size).cyclic)
        sum += c * ring.coefficient(count_below(ring, w.size, h, w.cells), p);
    long long N = w.count();
    if (sum % N != 0) throw std::logic_error("rank sum not divisible by the group order");
    return sum / N;
}

BigInt rank_fixed_content(const Word& w, const std::vector<int>& p) {
    check_word(w);
    if (parikh(w) != p) throw InvalidInput("word content does not match the given content");
    if (!is_canonical(w)) throw InvalidInput("word is not a necklace representative");
    return rank_fixed_content_any(w, p);
}

}  // namespace necklace
