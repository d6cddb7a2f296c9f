#include "necklace/generation.hpp"

#include <algorithm>

namespace necklace {

namespace {

using Bytes = std::vector<uint8_t>;

int slice_len(const Word& w) { return w.count() / w.slices(); }

const uint8_t* slice_ptr(const Word& w, int t) { return w.cells.data() + static_cast<long>(t) * slice_len(w); }

// Compares the cross-section translate g of slices [from, from + len) against
// the first len slices of w.
int compare_suffix(const Word& w, int from, int len, int g, const Shape& cs, Bytes& tmp) {
    SizeVec cross = cross_section(w.size);
    for (int t = 0; t < len; ++t) {
        translate_cells(slice_ptr(w, from + t), tmp.data(), cs, g);
        int c = compare_as_slices(tmp.data(), slice_ptr(w, t), cross);
        if (c) return c;
    }
    return 0;
}

// Prenecklace test restricted to the first `len` slices of w.
bool prefix_is_prenecklace(const Word& w, int len) {
    SizeVec cross = cross_section(w.size);
    auto cs = Shape::of(cross);
    int G = cs->N;
    Bytes tmp(slice_len(w));
    for (int from = 0; from < len; ++from)
        for (int g = 0; g < G; ++g)
            if (compare_suffix(w, from, len - from, g, *cs, tmp) < 0) return false;
    return true;
}

// Orbit members of a slice class, ordered by their offset to the class
// representative.
std::vector<std::pair<int, Bytes>> orbit_by_offset(const Bytes& rep, const SizeVec& cross) {
    auto cs = Shape::of(cross);
    std::vector<std::pair<int, Bytes>> out;
    Bytes s(rep.size()), c;
    for (int g = 0; g < cs->N; ++g) {
        translate_cells(rep.data(), s.data(), *cs, g);
        int off = canonical_cells(s.data(), cross, c);
        bool seen = false;
        for (auto& e : out)
            if (e.second == s) seen = true;
        if (!seen) out.emplace_back(off, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void set_slice(Word& w, int t, const Bytes& s) {
    std::copy(s.begin(), s.end(), w.cells.begin() + static_cast<long>(t) * slice_len(w));
}

bool is_max_slice(const Word& w, int t) {
    const uint8_t* p = slice_ptr(w, t);
    for (int k = 0; k < slice_len(w); ++k)
        if (p[k] != w.q) return false;
    return true;
}

// Largest slice class forced at position t: every translate of a suffix
// ending at t - 1 that matches a prefix of length k requires the slice at t to
// reach at least the class of slice k.
Bytes forced_class(const Word& w, int t, const Shape& cs, Bytes& tmp) {
    SizeVec cross = cross_section(w.size);
    Bytes best = Bytes(slice_len(w), 1), c;
    for (int k = 0; k <= t; ++k)
        for (int g = 0; g < cs.N; ++g) {
            if (k < t && compare_suffix(w, t - k, k, g, cs, tmp) != 0) continue;
            if (k == t) continue;
            canonical_cells(slice_ptr(w, k), cross, c);
            if (compare_cells(c.data(), best.data(), cross) > 0) best = c;
        }
    return best;
}

// Sets slice t to the smallest value keeping slices [0, t] a prenecklace,
// strictly above the current value when `above` is set.  Returns false when no
// such value exists.
bool smallest_slice(Word& w, int t, bool above) {
    SizeVec cross = cross_section(w.size);
    auto cs = Shape::of(cross);
    Bytes tmp(slice_len(w));
    Bytes cur(slice_ptr(w, t), slice_ptr(w, t) + slice_len(w));
    Bytes cls = forced_class(w, t, *cs, tmp);
    int off = -1;
    if (above) {
        Bytes rep;
        int o = canonical_cells(cur.data(), cross, rep);
        if (compare_cells(rep.data(), cls.data(), cross) >= 0) {
            cls = rep;
            off = o;
        }
    }
    Word c(cross, w.q, cls);
    for (bool first = true;; first = false) {
        for (auto& [o, s] : orbit_by_offset(c.cells, cross)) {
            if (first && o <= off) continue;
            set_slice(w, t, s);
            if (prefix_is_prenecklace(w, t + 1)) return true;
        }
        auto nx = next_class(c);
        if (!nx) break;
        c = *nx;
    }
    set_slice(w, t, cur);
    return false;
}

}  // namespace

std::optional<Word> next_class(const Word& c) {
    if (c.size.empty()) {
        if (c.cells[0] >= c.q) return std::nullopt;
        Word r = c;
        r.cells[0] += 1;
        return r;
    }
    return next_necklace(c);
}

bool is_prenecklace(const Word& w) {
    check_size(w.size);
    return prefix_is_prenecklace(w, w.slices());
}

NextPrenecklace next_prenecklace(const Word& w) {
    check_size(w.size);
    if (!is_prenecklace(w)) throw InvalidInput("next_prenecklace: input is not a prenecklace");
    int i = w.slices() - 1;
    while (i >= 0 && is_max_slice(w, i)) --i;
    if (i < 0) throw InvalidInput("next_prenecklace: input is the largest word");
    Word u = w;
    if (!smallest_slice(u, i, true)) throw std::logic_error("next_prenecklace: no valid slice increment");
    for (int t = i + 1; t < u.slices(); ++t) smallest_slice(u, t, false);
    return {u, is_canonical(u)};
}

std::optional<Word> next_necklace(const Word& w, int* calls) {
    check_size(w.size);
    int steps = 0;
    int m = w.slices();
    Word u = w;
    bool necklace = false;
    if (!is_prenecklace(w)) {
        // Smallest prenecklace above w: raise the last slice that can be
        // raised within the longest prenecklace prefix, then complete greedily.
        int k = 0;
        while (k < m && prefix_is_prenecklace(w, k + 1)) ++k;
        bool found = false;
        for (int j = k; j >= 0 && !found; --j) {
            Word v = w;
            if (!smallest_slice(v, j, true)) continue;
            for (int t = j + 1; t < m; ++t) smallest_slice(v, t, false);
            u = v;
            found = true;
        }
        if (!found) {
            if (calls) *calls = steps;
            return std::nullopt;
        }
        necklace = is_canonical(u);
    }
    while (!necklace) {
        int i = m - 1;
        while (i >= 0 && is_max_slice(u, i)) --i;
        if (i < 0) break;
        auto r = next_prenecklace(u);
        ++steps;
        u = r.word;
        necklace = r.is_necklace;
        if (!necklace && u == w) break;
    }
    if (calls) *calls = steps;
    if (!necklace) return std::nullopt;
    return u;
}

void enumerate(const SizeVec& n, int q, const std::function<bool(const Word&)>& emit) {
    check_size(n);
    Word w(n, q);
    while (true) {
        if (!emit(w)) return;
        auto nx = next_necklace(w);
        if (!nx) return;
        w = *nx;
    }
}

}  // namespace necklace
