#pragma once

#include <vector>

#include "necklace/word.hpp"

namespace necklace::testing {

// Ordered factorizations of every N in [1, max_volume] into at most max_dims
// factors, each factor >= 2 (plus the 1D size (1)).
inline void factorizations(int rest, int dims_left, SizeVec& cur, std::vector<SizeVec>& out) {
    if (rest == 1) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    if (dims_left == 0) return;
    for (int f = 2; f <= rest; ++f) {
        if (rest % f) continue;
        cur.push_back(f);
        factorizations(rest / f, dims_left - 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<SizeVec> grid_sizes(int max_volume, int max_dims = 4, int min_volume = 1) {
    std::vector<SizeVec> out;
    for (int n = std::max(1, min_volume); n <= max_volume; ++n) {
        if (n == 1) {
            out.push_back({1});
            continue;
        }
        SizeVec cur;
        factorizations(n, max_dims, cur, out);
    }
    return out;
}

inline std::string size_name(const SizeVec& n) {
    std::string s = "(";
    for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s + ")";
}

}  // namespace necklace::testing
