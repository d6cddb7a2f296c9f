#include "necklace/unranking.hpp"

#include <functional>
#include <map>

#include "necklace/counting.hpp"
#include "necklace/ranking.hpp"

namespace necklace {

namespace {

using Below = std::function<BigInt(const Word&)>;

// Smallest and largest words of size n that start with the given slices.
Word padded(const Word& prefix, const SizeVec& n, int symbol) {
    if (prefix.size.size() != n.size() || prefix.slices() > n.back() ||
        !std::equal(n.begin(), n.end() - 1, prefix.size.begin()))
        throw InvalidInput("prefix does not fit the word size");
    Word w = constant_word(n, prefix.q, symbol);
    std::copy(prefix.cells.begin(), prefix.cells.end(), w.cells.begin());
    return w;
}

// Representatives of the slice classes, by rank.
class SliceClasses {
public:
    SliceClasses(SizeVec cross, int q) : cross_(std::move(cross)), q_(q) {
        total_ = cross_.empty() ? BigInt(q) : count_necklaces(cross_, q);
    }
    const BigInt& total() const { return total_; }
    const Word& at(const BigInt& r) {
        auto it = cache_.find(r);
        if (it != cache_.end()) return it->second;
        Word c = cross_.empty() ? Word({}, q_, {static_cast<uint8_t>(static_cast<int>(r) + 1)}) : unrank(r, cross_, q_);
        return cache_.emplace(r, std::move(c)).first->second;
    }

private:
    SizeVec cross_;
    int q_;
    BigInt total_;
    std::map<BigInt, Word> cache_;
};

// Orbit of a slice class representative, ordered by offset.
std::vector<std::vector<uint8_t>> members(const Word& c) {
    if (c.size.empty()) return {c.cells};
    auto cs = Shape::of(c.size);
    std::map<int, std::vector<uint8_t>> by_offset;
    std::vector<uint8_t> s(c.cells.size()), rep;
    for (int g = 0; g < cs->N; ++g) {
        translate_cells(c.cells.data(), s.data(), *cs, g);
        by_offset.emplace(canonical_cells(s.data(), c.size, rep), s);
    }
    std::vector<std::vector<uint8_t>> out;
    for (auto& [o, v] : by_offset) out.push_back(v);
    return out;
}

// Builds the target slice by slice: the chosen slice is the largest one whose
// smallest completion has at most i smaller necklaces.
Word unrank_with(const BigInt& i, const SizeVec& n, int q, const Below& below) {
    Word w(n, q);
    const int m = w.slices();
    const size_t len = w.cells.size() / m;
    SliceClasses classes(cross_section(n), q);
    auto probe = [&](int t, const std::vector<uint8_t>& s) {
        std::copy(s.begin(), s.end(), w.cells.begin() + static_cast<long>(t * len));
        return below(w) <= i;
    };
    for (int t = 0; t < m; ++t) {
        BigInt lo = 0, hi = classes.total() - 1;
        while (lo < hi) {
            BigInt mid = (lo + hi + 1) / 2;
            if (probe(t, classes.at(mid).cells))
                lo = mid;
            else
                hi = mid - 1;
        }
        auto orbit = members(classes.at(lo));
        size_t pick = 0;
        while (pick + 1 < orbit.size() && probe(t, orbit[pick + 1])) ++pick;
        probe(t, orbit[pick]);
    }
    return w;
}

}  // namespace

BigInt prefix_count(const Word& prefix, const SizeVec& n) {
    check_size(n);
    Word lo = padded(prefix, n, 1), hi = padded(prefix, n, prefix.q);
    return rank_any(hi) + (is_canonical(hi) ? 1 : 0) - rank_any(lo);
}

BigInt prefix_count_fixed_content(const Word& prefix, const SizeVec& n, const std::vector<int>& p) {
    check_size(n);
    check_content(n, p);
    Word lo = padded(prefix, n, 1), hi = padded(prefix, n, prefix.q);
    bool hit = is_canonical(hi) && parikh(hi) == p;
    return rank_fixed_content_any(hi, p) + (hit ? 1 : 0) - rank_fixed_content_any(lo, p);
}

Word unrank(const BigInt& i, const SizeVec& n, int q) {
    check_size(n);
    if (q < 1) throw InvalidInput("alphabet size must be positive");
    if (i < 0 || i >= count_necklaces(n, q)) throw InvalidInput("rank out of range");
    Word w = unrank_with(i, n, q, [](const Word& x) { return rank_any(x); });
    if (!is_canonical(w) || rank_any(w) != i) throw std::logic_error("unrank: search did not land on a necklace");
    return w;
}

Word unrank_fixed_content(const BigInt& i, const SizeVec& n, const std::vector<int>& p) {
    check_size(n);
    check_content(n, p);
    int q = static_cast<int>(p.size());
    if (i < 0 || i >= count_fc_necklaces(n, p)) throw InvalidInput("rank out of range");
    Word w = unrank_with(i, n, q, [&](const Word& x) { return rank_fixed_content_any(x, p); });
    if (!is_canonical(w) || parikh(w) != p || rank_fixed_content_any(w, p) != i)
        throw std::logic_error("unrank: search did not land on a necklace");
    return w;
}

}  // namespace necklace
