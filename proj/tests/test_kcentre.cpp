#include <set>

#include "doctest.h"
#include "grid.hpp"
#include "necklace/io.hpp"
#include "necklace/kcentre.hpp"
#include "necklace/oracle.hpp"

using namespace necklace;

namespace {
Word w(const std::string& s, int q = 2) { return parse_word(s, std::nullopt, q); }
}  // namespace

TEST_CASE("overlap distance") {
    CHECK(overlap_distance(w("ababab"), w("abbabb")) == Ratio(25, 36));
    CHECK(overlap_distance(w("aaaa"), w("bbbb")) == 1);
    CHECK(overlap_distance(w("aaab"), w("aaaa")) == Ratio(10, 16));
    CHECK(overlap_distance(w("aaab"), w("aabb")) == Ratio(8, 16));
    CHECK(overlap_distance(w("[ab;ba]"), w("[ba;ab]")) == 0);
    CHECK_THROWS_AS(overlap_distance(w("ab"), w("abb")), InvalidInput);
}

TEST_CASE("overlap distance agrees with the oracle and is a metric") {
    for (const auto& n : std::vector<SizeVec>{{4}, {2, 2}, {2, 3}, {6}}) {
        auto all = census(n, 2).necklaces();
        for (const auto& a : all) {
            CHECK(overlap_distance(a, a) == 0);
            for (const auto& b : all) {
                Ratio ab = overlap_distance(a, b);
                CHECK(ab == oracle_distance(a, b));
                CHECK(ab == overlap_distance(b, a));
                if (!(a == b)) CHECK(ab > 0);
                for (const auto& c : all) CHECK(overlap_distance(a, c) <= ab + overlap_distance(b, c));
            }
        }
    }
}

TEST_CASE("de Bruijn sequences") {
    std::string expected = "0000001000011000101000111001001011001101001111010101110110111111";
    Word db = de_bruijn_sequence(2, 6);
    std::string got;
    for (auto s : db.cells) got += static_cast<char>('0' + s - 1);
    CHECK(got == expected);
    for (int q : {2, 3})
        for (int order = 1; order <= (q == 2 ? 8 : 5); ++order) {
            Word s = de_bruijn_sequence(q, order);
            std::set<std::vector<uint8_t>> seen;
            for (int p = 0; p < s.count(); ++p) seen.insert(subword(s, {p}, {order}).cells);
            CHECK(seen.size() == static_cast<size_t>(s.count()));
            CHECK(static_cast<long long>(s.count()) == static_cast<long long>(std::pow(q, order)));
        }
}

TEST_CASE("k-centre in one dimension") {
    auto cs = k_centre_1d(20, 2, 4);
    CHECK(cs.centres.size() == 4);
    CHECK(cs.lambda == 5);
    std::set<std::vector<uint8_t>> covered;
    for (const auto& c : cs.centres) {
        CHECK(c.size == SizeVec{20});
        for (int p = 0; p < 20; ++p) covered.insert(subword(c, {p}, {cs.lambda}).cells);
    }
    CHECK(covered.size() == 32u);

    for (int n = 2; n <= 8; ++n) {
        auto c = census({n}, 2);
        for (int k : {1, 2, 4}) {
            auto r = k_centre_1d(n, 2, k);
            // Fewer centres only when every necklace is already a centre.
            CHECK(r.centres.size() == std::min<size_t>(k, c.size_count()));
            Ratio worst = oracle_max_distance(r.centres, c);
            CHECK(worst <= r.bound);
            Ratio l = r.lambda;
            CHECK(worst <= 1 - l * (l + 1) / (2 * Ratio(n) * n));
        }
    }
}

TEST_CASE("k-centre in several dimensions") {
    for (const auto& n : std::vector<SizeVec>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {2, 2, 2}, {3, 3}}) {
        auto c = census(n, 2);
        for (int k : {1, 2, 3, 5}) {
            auto r = k_centre_multidim(n, 2, k);
            CHECK(r.centres.size() == std::min<size_t>(k, c.size_count()));
            for (const auto& x : r.centres) CHECK(x.size == n);
            CHECK(oracle_max_distance(r.centres, c) <= r.bound);
        }
    }
    CHECK(k_centre_uses_lines({2, 2}, 2, 2));
    CHECK(shared_subword_bound({4, 4}, {2, 1}) == Ratio(1) - Ratio(4, 512));
}

TEST_CASE("approximation ratio") {
    CHECK(approx_ratio({2}, 2, 1).has_value());
    CHECK(std::abs(*approx_ratio({2}, 2, 1) - 1.75L) < 1e-9L);
    CHECK(std::abs(*approx_ratio({8}, 8, 1) - 1.13393L) < 1e-4L);
    CHECK_FALSE(approx_ratio({3}, 2, 8).has_value());
    CHECK(lower_bound({4}, 2, 1) == doctest::Approx(0.5));
}

TEST_CASE("centres are distinct") {
    for (int n : {6, 9, 20, 21}) {
        auto cs = k_centre_1d(n, 2, 4);
        std::set<std::vector<uint8_t>> distinct;
        for (const auto& c : cs.centres) distinct.insert(c.cells);
        CHECK(distinct.size() == 4u);
    }
    auto cs = k_centre_multidim({2, 4}, 2, 6);
    std::set<std::vector<uint8_t>> distinct;
    for (const auto& c : cs.centres) distinct.insert(c.cells);
    CHECK(distinct.size() == 6u);
}
