#include "necklace/numtheory.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace necklace {

long long totient(long long n) {
    long long r = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

int mobius(long long n) {
    int r = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    if (n > 1) r = -r;
    return r;
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

std::vector<SizeVec> divisor_vectors(const SizeVec& n) {
    std::vector<SizeVec> out{{}};
    for (int ni : n) {
        std::vector<SizeVec> next;
        for (const auto& prefix : out)
            for (int f : divisors(ni)) {
                auto v = prefix;
                v.push_back(f);
                next.push_back(std::move(v));
            }
        out.swap(next);
    }
    // Reorder so the first coordinate varies fastest.
    std::sort(out.begin(), out.end(), [](const SizeVec& a, const SizeVec& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

BigInt power(const BigInt& base, long long exp) {
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt multinomial(const std::vector<long long>& parts) {
    BigInt r = 1;
    long long total = 0;
    for (long long k : parts) {
        for (long long i = 1; i <= k; ++i) {
            ++total;
            r *= total;
            r /= i;
        }
    }
    return r;
}

Subgroup closure(const std::vector<int>& generators, const Shape& shape) {
    std::vector<char> in(shape.N, 0);
    std::vector<int> frontier{0};
    in[0] = 1;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int h : frontier)
            for (int g : generators) {
                int s = shape.add(h, g);
                if (!in[s]) {
                    in[s] = 1;
                    next.push_back(s);
                }
            }
        frontier.swap(next);
    }
    Subgroup out;
    for (int i = 0; i < shape.N; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

Subgroup cyclic_subgroup(int g, const Shape& shape) { return closure({g}, shape); }

Subgroup tiling_subgroup(const SizeVec& f, const SizeVec& n) {
    auto shape = Shape::of(n);
    std::vector<int> gens;
    for (size_t i = 0; i < n.size(); ++i) {
        Translation t(n.size(), 0);
        t[i] = f[i] % n[i];
        gens.push_back(index_of(t, n));
    }
    return closure(gens, *shape);
}

std::vector<Subgroup> subgroups_within(const Subgroup& ambient, const Shape& shape) {
    std::set<Subgroup> cyc;
    for (int g : ambient) cyc.insert(cyclic_subgroup(g, shape));
    std::set<Subgroup> all(cyc.begin(), cyc.end());
    std::vector<Subgroup> frontier(cyc.begin(), cyc.end());
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& a : frontier)
            for (const auto& c : cyc) {
                if (std::includes(a.begin(), a.end(), c.begin(), c.end())) continue;
                std::vector<int> gens(a.begin(), a.end());
                gens.insert(gens.end(), c.begin(), c.end());
                Subgroup j = closure(gens, shape);
                if (all.insert(j).second) next.push_back(j);
            }
        frontier.swap(next);
    }
    return std::vector<Subgroup>(all.begin(), all.end());
}

namespace {
bool squarefree(long long k) { return mobius(k) != 0; }
}  // namespace

Subgroup squarefree_elements(const Shape& shape) {
    Subgroup out;
    for (int g = 0; g < shape.N; ++g)
        if (squarefree(shape.order(g))) out.push_back(g);
    return out;
}

long long subgroup_mobius(const Subgroup& h, const Shape& shape) {
    long long order = static_cast<long long>(h.size());
    for (int g : h)
        if (!squarefree(shape.order(g))) return 0;
    long long r = 1;
    long long rest = order;
    for (long long p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        long long term = (k % 2) ? -1 : 1;
        for (int i = 0; i < k * (k - 1) / 2; ++i) term *= p;
        r *= term;
    }
    return r;
}

}  // namespace necklace
