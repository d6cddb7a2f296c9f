#include "necklace/kcentre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "necklace/counting.hpp"
#include "necklace/generation.hpp"
#include "necklace/numtheory.hpp"

namespace necklace {

namespace {

constexpr long long kSequenceGuard = 1LL << 24;

long long ipow_capped(long long b, long long e, long long cap) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

std::vector<Word> all_necklaces(const SizeVec& n, int q, long long limit) {
    std::vector<Word> out;
    enumerate(n, q, [&](const Word& w) {
        out.push_back(w);
        return static_cast<long long>(out.size()) < limit;
    });
    return out;
}

// Least de Bruijn sequence over symbols 0..q-1 for alphabets too large for a
// Word; the usual recursive Lyndon-word concatenation.
std::vector<long long> de_bruijn_digits(long long q, int order) {
    std::vector<long long> a(static_cast<size_t>(order) + 1, 0), out;
    auto rec = [&](auto&& self, int t, int p) -> void {
        if (t > order) {
            if (order % p == 0)
                for (int i = 1; i <= p; ++i) out.push_back(a[i]);
            return;
        }
        a[t] = a[t - p];
        self(self, t + 1, p);
        for (long long j = a[t - p] + 1; j < q; ++j) {
            a[t] = j;
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
    return out;
}

// Largest order with q^order <= k * (n - order + 1).
int window_order(long long n, long long q, long long k) {
    int best = 0;
    for (int l = 1; l <= n; ++l)
        if (ipow_capped(q, l, k * (n - l + 1)) <= k * (n - l + 1)) best = l;
    return best;
}

CentreSet everything(const SizeVec& n, int q) {
    CentreSet s;
    s.centres = all_necklaces(n, q, std::numeric_limits<long long>::max());
    s.lambda = static_cast<int>(volume(n));
    s.block = n;
    s.bound = 0;
    return s;
}

CentreSet fallback(const SizeVec& n, int q, int k) {
    CentreSet s;
    s.centres = all_necklaces(n, q, k);
    s.block = SizeVec(n.size(), 0);
    s.bound = 1;
    return s;
}

// Drops repeated centres and tops the set up with the smallest unused necklaces.
void make_distinct(CentreSet& s, const SizeVec& n, int q, int k) {
    std::vector<Word> kept;
    for (auto& c : s.centres)
        if (std::find(kept.begin(), kept.end(), c) == kept.end()) kept.push_back(std::move(c));
    if (static_cast<int>(kept.size()) < k)
        enumerate(n, q, [&](const Word& x) {
            if (std::find(kept.begin(), kept.end(), x) == kept.end()) kept.push_back(x);
            return static_cast<int>(kept.size()) < k;
        });
    s.centres = std::move(kept);
}

}  // namespace

Ratio overlap_distance(const Word& a, const Word& b) {
    if (a.size != b.size) throw InvalidInput("overlap_distance: sizes differ");
    check_size(a.size);
    const SizeVec& n = a.size;
    auto big = Shape::of(n);
    const long long N = big->N;
    long long common = 0;
    // Iterate every subword size m with 1 <= m_i <= n_i.
    for (int mi = 0; mi < big->N; ++mi) {
        SizeVec m = big->coords(mi);
        for (auto& x : m) ++x;
        auto small = Shape::of(m);
        std::vector<int> offsets(small->N);
        for (int c = 0; c < small->N; ++c) offsets[c] = big->lin(small->coords(c));
        auto keys = [&](const Word& w) {
            std::vector<std::string> out;
            out.reserve(N);
            std::string key(small->N, '\0');
            for (int p = 0; p < N; ++p) {
                for (int c = 0; c < small->N; ++c) key[c] = static_cast<char>(w.cells[big->shift(p, offsets[c])]);
                out.push_back(key);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        auto ka = keys(a), kb = keys(b);
        size_t i = 0, j = 0;
        while (i < ka.size() && j < kb.size()) {
            int c = ka[i].compare(kb[j]);
            if (c == 0) {
                ++common;
                ++i;
                ++j;
            } else if (c < 0) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    return 1 - Ratio(common, N * N);
}

Word de_bruijn_sequence(int q, int order) {
    if (q < 2 || q > 255 || order < 1) throw InvalidInput("de Bruijn: need 2 <= q <= 255 and order >= 1");
    long long len = ipow_capped(q, order, kSequenceGuard);
    if (len > kSequenceGuard) throw GuardExceeded("de Bruijn: sequence too long");
    std::vector<uint8_t> cells;
    cells.reserve(len);
    enumerate({order}, q, [&](const Word& w) {
        int p = period(w).size[0];
        cells.insert(cells.end(), w.cells.begin(), w.cells.begin() + p);
        return true;
    });
    return Word({static_cast<int>(len)}, q, std::move(cells));
}

Ratio shared_subword_bound(const SizeVec& n, const SizeVec& m) {
    if (m.size() != n.size()) throw InvalidInput("shared_subword_bound: dimension mismatch");
    long long M = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        if (m[i] < 0 || m[i] > n[i]) throw InvalidInput("shared_subword_bound: block exceeds the word");
        M *= m[i];
    }
    long long N = volume(n);
    return 1 - Ratio(M * M, 2 * N * N);
}

CentreSet k_centre_1d(int n, int q, int k) {
    check_size({n});
    if (q < 1 || k < 1) throw InvalidInput("k_centre: need q >= 1 and k >= 1");
    if (count_necklaces({n}, q) <= k) return everything({n}, q);
    int lambda = window_order(n, q, k);
    if (lambda == 0) return fallback({n}, q, k);
    Word seq = de_bruijn_sequence(q, lambda);
    const long long len = seq.count(), step = n - lambda + 1;
    CentreSet s;
    for (long long i = 0; i < k; ++i) {
        Word c({n}, q);
        for (int t = 0; t < n; ++t) c.cells[t] = seq.cells[(i * step + t) % len];
        s.centres.push_back(canonicalize(c).word);
    }
    make_distinct(s, {n}, q, k);
    s.lambda = lambda;
    s.block = {lambda};
    s.bound = shared_subword_bound({n}, s.block);
    return s;
}

bool k_centre_uses_lines(const SizeVec& n, int q, int k) {
    check_size(n);
    long long lines = static_cast<long long>(k) * (volume(n) / n.back());
    return ipow_capped(q, n.back(), lines) <= lines;
}

CentreSet k_centre_multidim(const SizeVec& n, int q, int k) {
    check_size(n);
    if (q < 1 || k < 1) throw InvalidInput("k_centre: need q >= 1 and k >= 1");
    if (n.size() == 1) return k_centre_1d(n[0], q, k);
    if (count_necklaces(n, q) <= k) return everything(n, q);
    const int d = static_cast<int>(n.size());
    const long long N = volume(n);
    const int nd = n.back();
    auto shape = Shape::of(n);
    CentreSet s;

    if (k_centre_uses_lines(n, q, k)) {
        // Every line class appears as a line of some centre.
        const long long per = N / nd;
        CentreSet lines = k_centre_1d(nd, q, static_cast<int>(per * k));
        for (int g = 0; g < k; ++g) {
            Word c(n, q);
            for (long long x = 0; x < per; ++x) {
                const Word& line = lines.centres[(g * per + x) % lines.centres.size()];
                for (int t = 0; t < nd; ++t) c.cells[x + per * t] = line.cells[t];
            }
            s.centres.push_back(canonicalize(c).word);
        }
        s.block = SizeVec(d, 1);
        s.block.back() = nd;
    } else {
        // Blocks of size m (last entry 1) over the alphabet of all block contents.
        SizeVec best;
        long long bestM = 0;
        for (const auto& m : divisor_vectors(n)) {
            if (m.back() != 1) continue;
            long long M = volume(m), blocks = N / M;
            if (ipow_capped(q, M, k * blocks) <= k * blocks && M > bestM) {
                bestM = M;
                best = m;
            }
        }
        if (bestM == 0) return fallback(n, q, k);
        const long long Q = ipow_capped(q, bestM, kSequenceGuard);
        const long long B = N / bestM;
        int order = window_order(B, Q, k);
        auto seq = de_bruijn_digits(Q, order);
        const long long step = B - order + 1;
        SizeVec grid(d);
        for (int i = 0; i < d; ++i) grid[i] = n[i] / best[i];
        auto gshape = Shape::of(grid), bshape = Shape::of(best);
        for (long long i = 0; i < k; ++i) {
            Word c(n, q);
            for (long long b = 0; b < B; ++b) {
                long long sym = seq[(i * step + b) % seq.size()];
                auto origin = gshape->coords(static_cast<int>(b));
                for (int j = 0; j < bshape->N; ++j) {
                    auto local = bshape->coords(j);
                    std::vector<int> pos(d);
                    for (int t = 0; t < d; ++t) pos[t] = origin[t] * best[t] + local[t];
                    c.cells[shape->lin(pos)] = static_cast<uint8_t>(1 + sym % q);
                    sym /= q;
                }
            }
            s.centres.push_back(canonicalize(c).word);
        }
        s.block = best;
    }
    make_distinct(s, n, q, k);
    s.lambda = static_cast<int>(volume(s.block));
    s.bound = shared_subword_bound(n, s.block);
    return s;
}

long double lower_bound(const SizeVec& n, int q, int k) {
    check_size(n);
    if (q < 2 || k < 1) throw InvalidInput("lower_bound: need q >= 2 and k >= 1");
    long double N = static_cast<long double>(volume(n));
    return 1.0L - std::log(static_cast<long double>(k) * N) / std::log(static_cast<long double>(q)) / N;
}

std::optional<long double> approx_ratio(const SizeVec& n, int q, int k) {
    check_size(n);
    if (q < 2 || k < 1) throw InvalidInput("approx_ratio: need q >= 2 and k >= 1");
    long double N = static_cast<long double>(volume(n));
    long double L = std::log(static_cast<long double>(k) * N) / std::log(static_cast<long double>(q));
    if (L >= N - 1e-12L) return std::nullopt;
    return (1.0L - L * L / (2.0L * N * N)) / (1.0L - L / N);
}

}  // namespace necklace
