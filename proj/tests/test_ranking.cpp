#include <random>

#include "doctest.h"
#include "grid.hpp"
#include "necklace/counting.hpp"
#include "necklace/io.hpp"
#include "necklace/oracle.hpp"
#include "necklace/ranking.hpp"
#include "necklace/unranking.hpp"

using namespace necklace;

namespace {
Word w(const std::string& s, int q = 2) { return parse_word(s, std::nullopt, q); }
}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank_necklace(w("aaaa")).rn == 0);
    CHECK(rank_necklace(w("[ab;ab]")).rn == 3);
    CHECK(rank_necklace(w("aabb")).rn == 2);
    CHECK(count_T(w("aaaa"), {4}) == 0);
    CHECK(count_T(w("aabb"), {4}) == 5);
    CHECK(rank_fixed_content(w("abab"), {2, 2}) == 1);
    CHECK(rank_fixed_content(w("aabb"), {2, 2}) == 0);
    CHECK_THROWS_AS(rank_necklace(w("ba")), InvalidInput);
}

TEST_CASE("unrank examples") {
    CHECK(unrank(0, {3, 2}, 3) == constant_word({3, 2}, 3, 1));
    CHECK(unrank(4, {2, 2}, 2) == w("[ab;ba]"));
    CHECK(unrank_fixed_content(0, {4}, {2, 2}) == w("aabb"));
    CHECK(unrank_fixed_content(1, {4}, {2, 2}) == w("abab"));
    CHECK(unrank_fixed_content(0, {2, 2}, {4, 0}) == w("[aa;aa]"));
    CHECK_THROWS_AS(unrank_fixed_content(1, {2, 2}, {4, 0}), InvalidInput);
    CHECK_THROWS_AS(unrank(7, {2, 2}, 2), InvalidInput);
    CHECK_THROWS_AS(unrank(-1, {2, 2}, 2), InvalidInput);
}

TEST_CASE("prefix counts") {
    CHECK(prefix_count(parse_word("aa", SizeVec{2, 1}), {2, 2}) == 3);
    CHECK(prefix_count(w("b"), {2}) == 1);
    CHECK(prefix_count(Word({2, 0}, 2), {2, 2}) == 7);
}

TEST_CASE("count_T equals a direct count") {
    for (const auto& n : std::vector<SizeVec>{{4}, {2, 2}, {2, 3}, {6}}) {
        auto c = census(n, 2);
        for (const auto& x : c.necklaces()) {
            long long direct = 0;
            for (uint64_t code = 0; code < (1ull << volume(n)); ++code)
                if (compare(canonicalize(word_from_code(code, n, 2)).word, x) < 0) ++direct;
            CHECK(count_T(x, n) == direct);
        }
    }
}

TEST_CASE("ranks equal census positions") {
    for (int q : {2, 3}) {
        for (const auto& n : testing::grid_sizes(q == 2 ? 10 : 6)) {
            CAPTURE(testing::size_name(n));
            auto c = census(n, q);
            long long l = 0, a = 0;
            for (size_t i = 0; i < c.size_count(); ++i) {
                Word x = c.word(i);
                auto r = rank_necklace(x);
                CHECK(r.rn == i);
                CHECK(r.rl == l);
                CHECK(r.ra == a);
                CHECK(r.ra <= r.rl);
                CHECK(r.rl <= r.rn);
                CHECK(unrank(i, n, q) == x);
                l += c.lyndon[i];
                a += c.atranslational[i];
            }
        }
    }
}

TEST_CASE("rank of arbitrary words counts smaller representatives") {
    std::mt19937 rng(3);
    for (const auto& n : testing::grid_sizes(9, 3, 2)) {
        auto c = census(n, 2);
        for (int t = 0; t < 30; ++t) {
            Word x(n, 2);
            for (auto& s : x.cells) s = static_cast<uint8_t>(1 + rng() % 2);
            CHECK(rank_any(x) == oracle_count_below(x, c));
        }
    }
}

TEST_CASE("fixed-content round trip") {
    for (const auto& n : testing::grid_sizes(8)) {
        for (int q : {2, 3}) {
            auto c = census(n, q);
            for (const auto& p : parikh_vectors(static_cast<int>(volume(n)), q)) {
                auto ws = c.with_content(p);
                for (size_t i = 0; i < ws.size(); ++i) {
                    CHECK(rank_fixed_content(ws[i], p) == i);
                    CHECK(unrank_fixed_content(i, n, p) == ws[i]);
                }
            }
        }
    }
}

TEST_CASE("128-bit and big-integer paths agree") {
    // (4,4,4) over 3 symbols overflows 64 bits but not 128.
    Word x = unrank(BigInt("1000000000000000000000"), {4, 4, 4}, 3);
    CHECK(is_canonical(x));
    CHECK(rank_necklace(x).rn == BigInt("1000000000000000000000"));
}
