#include "necklace/rank_parts.hpp"

#include <map>
#include <numeric>
#include <set>

#include "necklace/below.hpp"
#include "necklace/numtheory.hpp"

namespace necklace {

namespace {

using Bytes = std::vector<uint8_t>;

struct SliceSetup {
    SizeVec cross;   // w's cross-section
    SizeVec fcross;  // f's cross-section
    int len = 1;
    int flen = 1;
};

SliceSetup setup(const Word& w, const SizeVec& f) {
    check_size(w.size);
    if (f.size() != w.size.size()) throw InvalidInput("f must have the dimension of w");
    for (size_t k = 0; k < f.size(); ++k)
        if (f[k] < 1 || w.size[k] % f[k] != 0) throw InvalidInput("f must divide the size of w");
    SliceSetup s;
    s.cross = cross_section(w.size);
    s.fcross = cross_section(f);
    s.len = static_cast<int>(volume(s.cross));
    s.flen = static_cast<int>(volume(s.fcross));
    return s;
}

const uint8_t* slice_at(const Word& w, int t, int len) { return w.cells.data() + static_cast<long>(t) * len; }

Bytes tiled(const Bytes& small, const SizeVec& from, const SizeVec& to) {
    if (to.empty()) return small;
    return tile(Word(from, 255, small), to).cells;
}

// Every slice of size f' with its tiled translates, for the automaton.
struct Letters {
    std::vector<Bytes> cells;
    std::vector<std::vector<Bytes>> images;  // images[x][h] = tile(h . x)
};

Letters all_letters(const SliceSetup& s, int q) {
    long long total = 1;
    for (int k = 0; k < s.flen; ++k) {
        total *= q;
        if (total > (1 << 20)) throw GuardExceeded("beta: too many slice values");
    }
    auto fs = Shape::of(s.fcross);
    Letters L;
    Bytes cur(s.flen, 1), tmp(s.flen);
    for (long long x = 0; x < total; ++x) {
        long long r = x;
        for (int k = 0; k < s.flen; ++k) {
            cur[k] = static_cast<uint8_t>(1 + r % q);
            r /= q;
        }
        L.cells.push_back(cur);
        std::vector<Bytes> im;
        for (int h = 0; h < fs->N; ++h) {
            translate_cells(cur.data(), tmp.data(), *fs, h);
            im.push_back(tiled(tmp, s.fcross, s.cross));
        }
        L.images.push_back(std::move(im));
    }
    return L;
}

int compare_slice(const Bytes& a, const uint8_t* b, const SizeVec& cross) {
    return compare_as_slices(a.data(), b, cross);
}

}  // namespace

BigInt beta(const Word& w, int i, int j, const SizeVec& f) {
    SliceSetup s = setup(w, f);
    if (j < 0 || j > i || i > f.back()) throw InvalidInput("beta: need 0 <= j <= i <= f_d");
    if (i == 0) return 1;
    Letters L = all_letters(s, w.q);
    const int H = static_cast<int>(L.images.empty() ? 1 : L.images[0].size());

    // A state lists the (matched length, translation) pairs whose suffix still
    // equals the prefix of w.
    using State = std::vector<std::pair<int, int>>;
    std::map<State, BigInt> cur{{State{}, BigInt(1)}};
    for (int t = 0; t < i; ++t) {
        std::map<State, BigInt> next;
        for (size_t x = 0; x < L.cells.size(); ++x) {
            if (t < j && compare_cells(L.images[x][0].data(), slice_at(w, t, s.len), s.cross) != 0) continue;
            for (auto& [st, cnt] : cur) {
                State ns;
                bool dead = false;
                auto step = [&](int k, int h) {
                    int c = compare_slice(L.images[x][h], slice_at(w, k, s.len), s.cross);
                    if (c < 0) dead = true;
                    if (c == 0) ns.emplace_back(k + 1, h);
                };
                for (auto [k, h] : st) step(k, h);
                for (int h = 0; h < H && !dead; ++h) step(0, h);
                if (dead) continue;
                std::sort(ns.begin(), ns.end());
                next[ns] += cnt;
            }
        }
        cur.swap(next);
    }
    auto it = cur.find(State{});
    return it == cur.end() ? BigInt(0) : it->second;
}

BigInt beta_recursive(const Word& w, int i, int j, const SizeVec& f) {
    setup(w, f);
    if (j < 0 || j > i || i > f.back()) throw InvalidInput("beta: need 0 <= j <= i <= f_d");
    std::map<std::pair<int, int>, BigInt> memo;
    auto rec = [&](auto&& self, int a, int b) -> BigInt {
        if (a == b) return b == 0 ? 1 : 0;
        auto key = std::make_pair(a, b);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt r = ns(w, b, f) * self(self, a - b - 1, 0) + self(self, a, b + 1);
        memo.emplace(key, r);
        return r;
    };
    return rec(rec, i, j);
}

BigInt ns(const Word& w, int j, const SizeVec& f) {
    SliceSetup s = setup(w, f);
    if (j < 0 || j >= w.slices()) throw InvalidInput("ns: slice index out of range");
    const uint8_t* target = slice_at(w, j, s.len);
    if (s.cross.empty()) return w.q - target[0];

    // Tiled slices are exactly the slices fixed by the tiling subgroup K.
    SizeVec fpad = s.fcross;
    Subgroup K = tiling_subgroup(fpad, s.cross);
    Bytes rep;
    int off = canonical_cells(target, s.cross, rep);
    BigInt fixed = power(BigInt(w.q), s.flen);
    BigInt below = count_below(CountRing<BigInt>{w.q}, s.cross, K, rep);

    // Members of the target's class that are K-fixed and not above the target.
    auto cs = Shape::of(s.cross);
    std::set<Bytes> seen;
    Bytes m(s.len), c;
    long long same = 0;
    for (int g = 0; g < cs->N; ++g) {
        translate_cells(rep.data(), m.data(), *cs, g);
        if (!seen.insert(m).second) continue;
        bool fixed_by_k = true;
        for (int k : K) {
            const auto& pm = cs->perm(k);
            for (int p = 0; p < s.len && fixed_by_k; ++p) fixed_by_k = m[pm[p]] == m[p];
        }
        if (fixed_by_k && canonical_cells(m.data(), s.cross, c) <= off) ++same;
    }
    return fixed - below - same;
}

long long theta_count(const Word& w, int j) {
    check_size(w.size);
    if (j < 0 || j > w.slices()) throw InvalidInput("theta_count: prefix length out of range");
    SizeVec cross = cross_section(w.size);
    auto cs = Shape::of(cross);
    const int len = static_cast<int>(volume(cross));
    std::set<Bytes> distinct;
    Bytes block(static_cast<size_t>(len) * j);
    for (int g = 0; g < cs->N; ++g) {
        for (int t = 0; t < j; ++t)
            translate_cells(slice_at(w, t, len), block.data() + static_cast<long>(t) * len, *cs, g);
        distinct.insert(block);
    }
    return static_cast<long long>(distinct.size());
}

BigInt u_correction(const Word& w) {
    check_size(w.size);
    if (!is_aperiodic(w) || is_atranslational(w)) return 0;
    SizeVec cross = cross_section(w.size);
    auto cs = Shape::of(cross);
    const int len = static_cast<int>(volume(cross));
    const int m = w.slices();
    // Length of the repeating block: the smallest last-coordinate shift among
    // the translations fixing w.
    int block = m;
    for (int g : stabilizer_indices(w))
        if (g != 0) block = std::gcd(block, g / len);
    std::set<Bytes> found;
    Bytes x(w.cells.size());
    for (int sigma = 0; sigma < cs->N; ++sigma) {
        std::copy(w.cells.begin(), w.cells.begin() + static_cast<long>(block) * len, x.begin());
        for (int t = block; t < m; ++t)
            translate_cells(x.data() + static_cast<long>(t - block) * len, x.data() + static_cast<long>(t) * len, *cs,
                            sigma);
        Word v(w.size, w.q, x);
        if (compare(v, w) < 0 && is_canonical(v) && is_aperiodic(v) && !is_atranslational(v)) found.insert(x);
    }
    return static_cast<long long>(found.size());
}

long long s_count(int g, int l, const SizeVec& n) {
    check_size(n);
    int nd = n.back();
    if (l < 1 || nd % l != 0) throw InvalidInput("l must divide the last dimension");
    auto cs = Shape::of(cross_section(n));
    if (g < 0 || g >= cs->N) throw InvalidInput("translation index out of range");
    long long c = 0;
    for (int x = 0; x < g; ++x)
        if (cs->order(x) == nd / l) ++c;
    return c;
}

}  // namespace necklace
