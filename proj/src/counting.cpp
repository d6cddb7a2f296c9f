#include "necklace/counting.hpp"

#include <map>
#include <numeric>

namespace necklace {

namespace {

long long lcm_of(const SizeVec& f) {
    long long r = 1;
    for (int x : f) r = std::lcm(r, static_cast<long long>(x));
    return r;
}

long long mobius_ratio(const SizeVec& n, const SizeVec& f) {
    long long r = 1;
    for (size_t i = 0; i < n.size(); ++i) r *= mobius(n[i] / f[i]);
    return r;
}

BigInt exact_div(const BigInt& a, long long b) {
    if (a % b != 0) throw std::logic_error("inexact division in a counting identity");
    return a / b;
}

// Multinomial of p / k over N / k cells, or 0 if k does not divide every entry.
BigInt scaled_multinomial(const std::vector<int>& p, long long k) {
    std::vector<long long> parts;
    for (int x : p) {
        if (x % k != 0) return 0;
        parts.push_back(x / k);
    }
    return multinomial(parts);
}

void check_alphabet(int q) {
    if (q < 1) throw InvalidInput("alphabet size must be at least 1");
}

}  // namespace

void check_content(const SizeVec& n, const std::vector<int>& p) {
    check_size(n);
    long long s = 0;
    for (int x : p) {
        if (x < 0) throw InvalidInput("content entries must be non-negative");
        s += x;
    }
    if (p.empty()) throw InvalidInput("content must have at least one entry");
    if (s != volume(n)) throw InvalidInput("content does not sum to the word volume");
}

BigInt count_necklaces(const SizeVec& n, int q) {
    check_size(n);
    check_alphabet(q);
    long long N = volume(n);
    BigInt sum = 0;
    for (const auto& f : divisor_vectors(n)) {
        long long w = 1;
        for (int x : f) w *= totient(x);
        sum += w * power(q, N / lcm_of(f));
    }
    return exact_div(sum, N);
}

BigInt count_lyndon(const SizeVec& n, int q) {
    check_size(n);
    check_alphabet(q);
    BigInt sum = 0;
    for (const auto& f : divisor_vectors(n)) {
        long long mu = mobius_ratio(n, f);
        if (mu) sum += mu * count_necklaces(f, q);
    }
    return sum;
}

const GroupTables& group_tables(const SizeVec& n) {
    static std::map<SizeVec, GroupTables> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto sh = Shape::of(n);
    GroupTables t;

    std::map<Subgroup, long long> cyc;
    for (int g = 0; g < sh->N; ++g) cyc[cyclic_subgroup(g, *sh)] += 1;
    for (auto& [h, c] : cyc) t.cyclic.emplace_back(h, c);

    for (const auto& h : subgroups_within(squarefree_elements(*sh), *sh)) {
        long long mu = subgroup_mobius(h, *sh);
        if (mu) t.mobius.emplace_back(h, mu);
    }

    std::map<Subgroup, long long> ap;
    for (const auto& f : divisor_vectors(n)) {
        long long mu = mobius_ratio(n, f);
        if (!mu) continue;
        Subgroup tiles = tiling_subgroup(f, n);
        for (auto& [h, c] : cyc) {
            std::vector<int> gens(h.begin(), h.end());
            gens.insert(gens.end(), tiles.begin(), tiles.end());
            ap[closure(gens, *sh)] += mu * c;
        }
    }
    for (auto& [h, c] : ap)
        if (c) t.aperiodic.emplace_back(h, c);
    return cache.emplace(n, std::move(t)).first->second;
}

BigInt count_atranslational(const SizeVec& n, int q) {
    check_size(n);
    check_alphabet(q);
    long long N = volume(n);
    BigInt sum = 0;
    for (const auto& [h, mu] : group_tables(n).mobius)
        sum += mu * power(q, N / static_cast<long long>(h.size()));
    return exact_div(sum, N);
}

BigInt count_fc_necklaces(const SizeVec& n, const std::vector<int>& p) {
    check_content(n, p);
    long long N = volume(n);
    BigInt sum = 0;
    for (const auto& f : divisor_vectors(n)) {
        long long w = 1;
        for (int x : f) w *= totient(x);
        sum += w * scaled_multinomial(p, lcm_of(f));
    }
    return exact_div(sum, N);
}

BigInt count_fc_lyndon(const SizeVec& n, const std::vector<int>& p) {
    check_content(n, p);
    long long N = volume(n);
    BigInt sum = 0;
    for (const auto& f : divisor_vectors(n)) {
        long long mu = mobius_ratio(n, f);
        if (!mu) continue;
        long long F = volume(f);
        std::vector<int> sub;
        bool ok = true;
        for (int x : p) {
            if ((static_cast<long long>(x) * F) % N != 0) ok = false;
            sub.push_back(static_cast<int>(static_cast<long long>(x) * F / N));
        }
        if (ok) sum += mu * count_fc_necklaces(f, sub);
    }
    return sum;
}

BigInt count_fc_atranslational(const SizeVec& n, const std::vector<int>& p) {
    check_content(n, p);
    long long N = volume(n);
    BigInt sum = 0;
    for (const auto& [h, mu] : group_tables(n).mobius)
        sum += mu * scaled_multinomial(p, static_cast<long long>(h.size()));
    return exact_div(sum, N);
}

BigInt g_set_size(int l, const SizeVec& n) {
    check_size(n);
    int nd = n.back();
    if (l < 1 || nd % l != 0) throw InvalidInput("l must divide the last dimension");
    int want = nd / l;
    SizeVec cross(n.begin(), n.end() - 1);
    auto sh = Shape::of(cross);
    long long c = 0;
    for (int x = 0; x < sh->N; ++x)
        if (sh->order(x) == want) ++c;
    return c;
}

int i_func(int i, int l, const SizeVec& n) {
    int d = static_cast<int>(n.size());
    if (i < 1 || i > d) throw InvalidInput("dimension index out of range");
    if (i == d || l > 1) return 0;
    SizeVec lower(n.begin(), n.end() - 1);
    int rest = i_func(i, l, lower);
    return n[i - 1] == n[d - 1] ? 1 + rest : rest;
}

BigInt h_func(int i, int l, const SizeVec& n, int d) {
    if (d != static_cast<int>(n.size())) throw InvalidInput("h_func: d must equal the dimension of n");
    if (i < 1 || i > d) throw InvalidInput("dimension index out of range");
    if (i == d) return 1;
    SizeVec lower(n.begin(), n.end() - 1);
    return (g_set_size(1, n) - i_func(i, l, n)) * h_func(i, l, lower, d - 1);
}

std::vector<std::vector<int>> parikh_vectors(int total, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(q, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == q - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    if (q >= 1) rec(rec, 0, total);
    return out;
}

}  // namespace necklace
