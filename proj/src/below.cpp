#include "necklace/below.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace necklace {

namespace {

using Bytes = std::vector<uint8_t>;

std::unordered_map<std::string, std::shared_ptr<const BelowPlan>>& plan_cache() {
    static std::unordered_map<std::string, std::shared_ptr<const BelowPlan>> cache;
    return cache;
}

Bytes shifted(const Bytes& s, const Shape& sh, int g) {
    Bytes out(s.size());
    translate_cells(s.data(), out.data(), sh, g);
    return out;
}

std::shared_ptr<BelowPlan> build_plan(const SizeVec& n, const Subgroup& h, const Bytes& w) {
    auto plan = std::make_shared<BelowPlan>();
    BelowPlan& P = *plan;
    P.cross = SizeVec(n.begin(), n.end() - 1);
    P.m = n.back();
    const int crossN = static_cast<int>(volume(P.cross));
    auto csh = Shape::of(P.cross);
    const int G = crossN;

    int e = P.m;
    for (int x : h) e = std::gcd(e, x / crossN);
    P.e = e;
    P.scale = P.m / e;
    int lead = 0;
    for (int x : h) {
        if (x < crossN) P.K.push_back(x);
        if (e != P.m && x / crossN == e) lead = x % crossN;
    }
    int back = csh->neg(lead);

    std::vector<Bytes> prefix(e);
    for (int t = 0; t < e; ++t)
        prefix[t].assign(w.begin() + static_cast<long>(t) * crossN,
                         w.begin() + static_cast<long>(t + 1) * crossN);

    // The word determined by repeating the prefix under sigma.
    {
        Bytes rep;
        rep.reserve(w.size());
        std::vector<Bytes> cur = prefix;
        for (int b = 0; b < P.scale; ++b) {
            for (auto& s : cur) rep.insert(rep.end(), s.begin(), s.end());
            for (auto& s : cur) s = shifted(s, *csh, back);
        }
        P.wrap_less = compare_cells(rep.data(), w.data(), n) < 0;
    }

    // Classes of the prefix slices, sorted.
    std::vector<Bytes> classes;
    std::vector<int> prefix_class(e);
    {
        std::vector<Bytes> raw;
        for (auto& s : prefix) {
            Bytes c;
            canonical_cells(s.data(), P.cross, c);
            raw.push_back(c);
        }
        classes = raw;
        std::sort(classes.begin(), classes.end(), [&](const Bytes& a, const Bytes& b) {
            return compare_cells(a.data(), b.data(), P.cross) < 0;
        });
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        for (int t = 0; t < e; ++t)
            prefix_class[t] = static_cast<int>(std::lower_bound(classes.begin(), classes.end(), raw[t],
                                                                [&](const Bytes& a, const Bytes& b) {
                                                                    return compare_cells(a.data(), b.data(),
                                                                                         P.cross) < 0;
                                                                }) -
                                               classes.begin());
    }
    P.classes = classes;

    auto fixed_by_k = [&](const Bytes& s) {
        for (int k : P.K) {
            const auto& pm = csh->perm(k);
            for (int c = 0; c < crossN; ++c)
                if (s[pm[c]] != s[c]) return false;
        }
        return true;
    };
    if (P.cross.empty()) {
        for (size_t r = 0; r < classes.size(); ++r) {
            P.specials.push_back(classes[r]);
            P.special_class.push_back(static_cast<int>(r));
        }
    } else {
        for (size_t r = 0; r < classes.size(); ++r) {
            std::set<Bytes> orbit;
            for (int g = 0; g < G; ++g) orbit.insert(shifted(classes[r], *csh, g));
            for (const auto& s : orbit)
                if (fixed_by_k(s)) {
                    P.specials.push_back(s);
                    P.special_class.push_back(static_cast<int>(r));
                }
        }
    }
    const int A = static_cast<int>(P.specials.size());
    std::map<Bytes, int> special_index;
    for (int a = 0; a < A; ++a) special_index[P.specials[a]] = a;
    P.sigma.resize(A);
    for (int a = 0; a < A; ++a) P.sigma[a] = special_index.at(shifted(P.specials[a], *csh, back));

    // cmp[(a * G + theta) * e + k] compares theta . special_a with prefix_k.
    std::vector<signed char> cmp(static_cast<size_t>(A) * G * e);
    {
        Bytes tmp(crossN);
        for (int a = 0; a < A; ++a)
            for (int th = 0; th < G; ++th) {
                translate_cells(P.specials[a].data(), tmp.data(), *csh, th);
                for (int k = 0; k < e; ++k)
                    cmp[(static_cast<size_t>(a) * G + th) * e + k] =
                        static_cast<signed char>(compare_as_slices(tmp.data(), prefix[k].data(), P.cross));
            }
    }

    // stab[L] = translations fixing prefix slices 0..L-1.
    std::vector<std::vector<char>> stab(e + 1, std::vector<char>(G, 0));
    std::fill(stab[0].begin(), stab[0].end(), 1);
    for (int L = 0; L < e; ++L)
        for (int th = 0; th < G; ++th) {
            if (!stab[L][th]) continue;
            Bytes s = shifted(prefix[L], *csh, th);
            stab[L + 1][th] = s == prefix[L];
        }
    auto normal = [&](int L, int tau) {
        int best = tau;
        for (int th = 0; th < G; ++th)
            if (stab[L][th]) best = std::min(best, csh->add(tau, th));
        return best;
    };

    // prefix images under every translation, for matching suffixes.
    std::vector<std::vector<Bytes>> image(e, std::vector<Bytes>(G));
    for (int k = 0; k < e; ++k)
        for (int g = 0; g < G; ++g) image[k][g] = shifted(prefix[k], *csh, g);

    // State (L, tau): the matched text is tau . prefix[0..L).
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> list;
    auto intern = [&](int L, int tau) {
        auto key = std::make_pair(L, normal(L, tau));
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(list.size());
        ids.emplace(key, id);
        list.push_back(key);
        return id;
    };
    intern(0, 0);

    std::vector<int> trans;
    std::vector<char> full;
    std::vector<int> smax;
    for (size_t s = 0; s < list.size(); ++s) {
        auto [L, tau] = list[s];
        // thetas[k] = translations matching the length-k suffix onto prefix[0..k).
        std::vector<std::vector<int>> thetas(L + 1);
        int best = -1;
        for (int k = 0; k <= L; ++k) {
            for (int th = 0; th < G; ++th) {
                int g = csh->add(tau, th);
                bool ok = true;
                for (int i = 0; i < k && ok; ++i)
                    ok = image[L - k + i][g] == prefix[i];
                if (ok) thetas[k].push_back(th);
            }
            if (!thetas[k].empty()) best = std::max(best, prefix_class[k]);
        }
        smax.push_back(best);
        for (int a = 0; a < A; ++a) {
            bool bad = false;
            int nextL = 0, nextTau = 0;
            bool hit = false;
            for (int k = 0; k <= L && !bad; ++k)
                for (int th : thetas[k]) {
                    int c = cmp[(static_cast<size_t>(a) * G + th) * e + k];
                    if (c < 0) {
                        bad = true;
                        break;
                    }
                    if (c == 0) {
                        if (k + 1 == e)
                            hit = true;
                        else if (k + 1 > nextL) {
                            nextL = k + 1;
                            nextTau = csh->neg(th);
                        }
                    }
                }
            if (bad) {
                trans.push_back(-1);
                full.push_back(0);
            } else {
                trans.push_back(intern(nextL, nextTau));
                full.push_back(hit ? 1 : 0);
            }
        }
    }
    P.states = static_cast<int>(list.size());
    P.trans = std::move(trans);
    P.trans_full = std::move(full);
    P.state_max = std::move(smax);
    return plan;
}

}  // namespace

std::string below_key(const SizeVec& n, const Subgroup& h, const std::vector<uint8_t>& w) {
    std::string k;
    for (int x : n) k += std::to_string(x) + ",";
    k += "|";
    for (int x : h) k += std::to_string(x) + ",";
    k += "|";
    k.append(reinterpret_cast<const char*>(w.data()), w.size());
    return k;
}

std::shared_ptr<const BelowPlan> below_plan(const SizeVec& n, const Subgroup& h,
                                            const std::vector<uint8_t>& w) {
    auto& cache = plan_cache();
    std::string key = below_key(n, h, w);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto plan = build_plan(n, h, w);
    if (cache.size() > (1u << 16)) cache.clear();
    cache.emplace(std::move(key), plan);
    return plan;
}

void clear_below_caches() { plan_cache().clear(); }

}  // namespace necklace
