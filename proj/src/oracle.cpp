#include "necklace/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace necklace {

uint64_t oracle_guard() {
    if (const char* s = std::getenv("NECKLACE_ORACLE_GUARD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1ULL << 24;
}

namespace {

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Total words q^N, or throws when over the guard.
uint64_t guarded_total(const SizeVec& n, int q) {
    check_size(n);
    if (q < 1) throw InvalidInput("alphabet size must be positive");
    long long N = volume(n);
    uint64_t g = oracle_guard();
    uint64_t t = 1;
    for (long long i = 0; i < N; ++i) {
        if (t > g / static_cast<uint64_t>(q)) throw GuardExceeded("oracle: q^N exceeds the enumeration guard");
        t *= static_cast<uint64_t>(q);
    }
    if (t > g) throw GuardExceeded("oracle: q^N exceeds the enumeration guard");
    return t;
}

}  // namespace

uint64_t word_code(const Word& w) {
    uint64_t c = 0, m = 1;
    for (auto x : w.cells) {
        c += static_cast<uint64_t>(x - 1) * m;
        m *= static_cast<uint64_t>(w.q);
    }
    return c;
}

Word word_from_code(uint64_t code, const SizeVec& n, int q) {
    Word w(n, q);
    for (auto& x : w.cells) {
        x = static_cast<uint8_t>(1 + code % static_cast<uint64_t>(q));
        code /= static_cast<uint64_t>(q);
    }
    return w;
}

Word OracleCensus::word(size_t i) const { return word_from_code(codes.at(i), size, q); }

std::vector<Word> OracleCensus::necklaces() const {
    std::vector<Word> out;
    for (size_t i = 0; i < codes.size(); ++i) out.push_back(word(i));
    return out;
}

std::vector<Word> OracleCensus::lyndon_words() const {
    std::vector<Word> out;
    for (size_t i = 0; i < codes.size(); ++i)
        if (lyndon[i]) out.push_back(word(i));
    return out;
}

std::vector<Word> OracleCensus::atranslational_words() const {
    std::vector<Word> out;
    for (size_t i = 0; i < codes.size(); ++i)
        if (atranslational[i]) out.push_back(word(i));
    return out;
}

std::vector<Word> OracleCensus::with_content(const std::vector<int>& p) const {
    std::vector<Word> out;
    for (size_t i = 0; i < codes.size(); ++i) {
        Word w = word(i);
        if (parikh(w) == p) out.push_back(std::move(w));
    }
    return out;
}

OracleCensus census(const SizeVec& n, int q) {
    uint64_t total = guarded_total(n, q);
    OracleCensus c;
    c.size = n;
    c.q = q;
    const int N = static_cast<int>(volume(n));
    const int m = n.back();
    const int cellsPerSlice = N / m;
    SizeVec cross(n.begin(), n.end() - 1);
    const uint64_t sliceCount = ipow(static_cast<uint64_t>(q), cellsPerSlice);

    // Ordinal of every slice under the slice order.
    std::vector<uint32_t> ordinal(sliceCount);
    {
        std::vector<Word> slices;
        for (uint64_t s = 0; s < sliceCount; ++s) {
            Word x = word_from_code(s, cross, q);
            if (cross.empty()) x.cells.assign(1, static_cast<uint8_t>(1 + s));
            slices.push_back(x);
        }
        std::vector<uint32_t> idx(sliceCount);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
            return compare_as_slices(slices[a].cells.data(), slices[b].cells.data(), cross) < 0;
        });
        for (uint64_t r = 0; r < sliceCount; ++r) ordinal[idx[r]] = static_cast<uint32_t>(r);
    }

    auto sh = Shape::of(n);
    std::vector<std::vector<int>> perms(N);
    for (int g = 0; g < N; ++g) perms[g] = sh->perm(g);
    std::vector<uint64_t> qpow(N + 1, 1);
    for (int i = 1; i <= N; ++i) qpow[i] = qpow[i - 1] * static_cast<uint64_t>(q);

    // Translations along a single coordinate, for the periodicity test.
    std::vector<int> axis;
    for (size_t i = 0; i < n.size(); ++i)
        for (int s = 1; s < n[i]; ++s) {
            Translation t(n.size(), 0);
            t[i] = s;
            axis.push_back(index_of(t, n));
        }

    // Burnside: fixed words of g number q^(cycles of g).
    {
        long long sum = 0;
        for (int g = 0; g < N; ++g) {
            std::vector<char> seen(N, 0);
            int cycles = 0;
            for (int p = 0; p < N; ++p) {
                if (seen[p]) continue;
                ++cycles;
                for (int x = p; !seen[x]; x = perms[g][x]) seen[x] = 1;
            }
            sum += static_cast<long long>(qpow[cycles]);
        }
        c.burnside = sum / N;
    }

    std::vector<uint64_t> visited((total + 63) / 64, 0);
    std::vector<uint8_t> cells(N);
    struct Found {
        uint64_t key, code;
        char lyndon, atrans;
    };
    std::vector<Found> found;
    for (uint64_t code = 0; code < total; ++code) {
        if (visited[code >> 6] >> (code & 63) & 1) continue;
        uint64_t r = code;
        for (int p = 0; p < N; ++p) {
            cells[p] = static_cast<uint8_t>(r % static_cast<uint64_t>(q));
            r /= static_cast<uint64_t>(q);
        }
        uint64_t bestKey = ~0ULL, bestCode = 0;
        int fixing = 0;
        std::vector<char> fixes(N, 0);
        for (int g = 0; g < N; ++g) {
            const auto& pm = perms[g];
            uint64_t tc = 0, key = 0;
            for (int t = 0; t < m; ++t) {
                uint64_t sc = 0;
                for (int p = 0; p < cellsPerSlice; ++p)
                    sc += cells[pm[t * cellsPerSlice + p]] * qpow[p];
                tc += sc * qpow[t * cellsPerSlice];
                key = key * sliceCount + ordinal[sc];
            }
            visited[tc >> 6] |= 1ULL << (tc & 63);
            if (tc == code) {
                ++fixing;
                fixes[g] = 1;
            }
            if (key < bestKey) {
                bestKey = key;
                bestCode = tc;
            }
        }
        bool periodic = false;
        for (int g : axis)
            if (fixes[g]) periodic = true;
        found.push_back({bestKey, bestCode, static_cast<char>(!periodic), static_cast<char>(fixing == 1)});
    }
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.key < b.key; });
    for (const auto& f : found) {
        c.codes.push_back(f.code);
        c.lyndon.push_back(f.lyndon);
        c.atranslational.push_back(f.atrans);
        c.lyndon_count += f.lyndon;
        c.atranslational_count += f.atrans;
    }
    return c;
}

long long oracle_count_below(const Word& w, const OracleCensus& c) {
    if (w.size != c.size || w.q != c.q) throw InvalidInput("oracle: word does not match the census");
    long long lo = 0, hi = static_cast<long long>(c.codes.size());
    while (lo < hi) {
        long long mid = (lo + hi) / 2;
        if (compare(c.word(mid), w) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

long long oracle_rank(const Word& w, const OracleCensus& c) {
    long long r = oracle_count_below(w, c);
    if (r >= static_cast<long long>(c.codes.size()) || c.word(r) != w)
        throw InvalidInput("oracle: word is not a listed necklace");
    return r;
}

namespace {

std::map<std::pair<SizeVec, std::vector<uint8_t>>, long long> subword_multiset(const Word& w) {
    std::map<std::pair<SizeVec, std::vector<uint8_t>>, long long> ms;
    auto sh = Shape::of(w.size);
    for (int mi = 0; mi < sh->N; ++mi) {
        SizeVec m = sh->coords(mi);
        for (auto& x : m) x += 1;
        for (int p = 0; p < sh->N; ++p) {
            Word s = subword(w, sh->coords(p), m);
            ms[{m, s.cells}] += 1;
        }
    }
    return ms;
}

}  // namespace

Ratio oracle_distance(const Word& a, const Word& b) {
    if (a.size != b.size) throw InvalidInput("distance: size mismatch");
    auto A = subword_multiset(a), B = subword_multiset(b);
    long long common = 0;
    for (const auto& [k, v] : A) {
        auto it = B.find(k);
        if (it != B.end()) common += std::min(v, it->second);
    }
    long long N = a.count();
    return Ratio(1) - Ratio(common, N * N);
}

Ratio oracle_max_distance(const std::vector<Word>& centres, const OracleCensus& c) {
    if (centres.empty()) throw InvalidInput("no centres given");
    Ratio worst = 0;
    for (size_t i = 0; i < c.codes.size(); ++i) {
        Word w = c.word(i);
        Ratio best = 1;
        for (const auto& z : centres) best = std::min(best, oracle_distance(w, z));
        worst = std::max(worst, best);
    }
    return worst;
}

namespace {

// Word of size (f', i) from a base-q code.
Word small_word(uint64_t code, const SizeVec& fcross, int rows, int q) {
    SizeVec n = fcross;
    n.push_back(rows);
    return word_from_code(code, n, q);
}

Word lift_cross(const Word& u, const SizeVec& cross) {
    SizeVec n = cross;
    n.push_back(u.slices());
    return tile(u, n);
}

}  // namespace

long long oracle_beta(const Word& w, int i, int j, const SizeVec& f) {
    SizeVec cross = cross_section(w.size), fcross = cross_section(f);
    long long per = volume(fcross);
    uint64_t total = 1;
    for (long long k = 0; k < per * i; ++k) {
        total *= static_cast<uint64_t>(w.q);
        if (total > oracle_guard()) throw GuardExceeded("oracle: beta enumeration exceeds the guard");
    }
    SizeVec fslice = fcross;
    fslice.push_back(1);
    long long hits = 0;
    for (uint64_t code = 0; code < total; ++code) {
        Word u = small_word(code, fcross, i, w.q);
        if (j > 0 && compare(lift_cross(slice_range(u, 0, j), cross), slice_range(w, 0, j)) != 0) continue;
        bool ok = true;
        for (int s = 0; s < i && ok; ++s) {
            Word suffix = slice_range(u, s, i - s);
            for (long long h = 0; h < per && ok; ++h) {
                Translation t = translation_at(static_cast<int>(h), fslice);
                Word moved = translate(suffix, t);
                ok = compare(lift_cross(moved, cross), slice_range(w, 0, i - s)) > 0;
            }
        }
        if (ok) ++hits;
    }
    return hits;
}

long long oracle_ns(const Word& w, int j, const SizeVec& f) {
    SizeVec cross = cross_section(w.size), fcross = cross_section(f);
    Word target = slice_range(w, j, 1);
    long long per = volume(fcross);
    uint64_t total = 1;
    for (long long k = 0; k < per; ++k) total *= static_cast<uint64_t>(w.q);
    long long hits = 0;
    for (uint64_t code = 0; code < total; ++code)
        if (compare(lift_cross(small_word(code, fcross, 1, w.q), cross), target) > 0) ++hits;
    return hits;
}

}  // namespace necklace
