#include <random>

#include "doctest.h"
#include "grid.hpp"
#include "necklace/generation.hpp"
#include "necklace/io.hpp"
#include "necklace/oracle.hpp"

using namespace necklace;

namespace {
Word w(const std::string& s, int q = 2) { return parse_word(s, std::nullopt, q); }

std::vector<Word> listed(const SizeVec& n, int q) {
    std::vector<Word> out;
    enumerate(n, q, [&](const Word& x) {
        out.push_back(x);
        return true;
    });
    return out;
}
}  // namespace

TEST_CASE("prenecklace examples") {
    CHECK(is_prenecklace(w("ababa")));
    CHECK_FALSE(is_prenecklace(w("abaa")));
    CHECK(is_prenecklace(w("[aa;ab]")));
    CHECK_FALSE(is_prenecklace(w("[ab;aa]")));
}

TEST_CASE("next prenecklace and necklace examples") {
    auto r = next_prenecklace(w("aaa"));
    CHECK(r.word == w("aab"));
    CHECK(r.is_necklace);
    CHECK(next_necklace(w("[aa;ab]")) == w("[aa;bb]"));
    CHECK(next_necklace(w("aaab")) == w("aabb"));
    CHECK_FALSE(next_necklace(w("bbbb")).has_value());
    CHECK_THROWS_AS(next_prenecklace(w("bbbb")), InvalidInput);
    CHECK_THROWS_AS(next_prenecklace(w("abaa")), InvalidInput);
    // A non-prenecklace input jumps to the next necklace above it.
    CHECK(next_necklace(w("abaa")) == w("abab"));
}

TEST_CASE("enumeration of (2,2)") {
    std::vector<Word> expected = {w("[aa;aa]"), w("[aa;ab]"), w("[aa;bb]"), w("[ab;ab]"),
                                  w("[ab;ba]"), w("[ab;bb]"), w("[bb;bb]")};
    CHECK(listed({2, 2}, 2) == expected);
    CHECK(listed({1}, 3) == std::vector<Word>{w("a", 3), w("b", 3), w("c", 3)});
    CHECK(listed({2, 3}, 2).size() == 14);
}

TEST_CASE("enumeration equals the census") {
    for (int q : {2, 3}) {
        for (const auto& n : testing::grid_sizes(q == 2 ? 10 : 6)) {
            CAPTURE(testing::size_name(n));
            auto c = census(n, q);
            CHECK(listed(n, q) == c.necklaces());
        }
    }
}

TEST_CASE("prenecklaces are prefixes of representatives") {
    std::mt19937 rng(11);
    for (const auto& n : testing::grid_sizes(8, 3, 2)) {
        for (int q : {2, 3}) {
            for (int t = 0; t < 60; ++t) {
                Word x(n, q);
                for (auto& s : x.cells) s = static_cast<uint8_t>(1 + rng() % q);
                SizeVec longer = n;
                longer.back() *= 2;
                Word ext = constant_word(longer, q, q);
                std::copy(x.cells.begin(), x.cells.end(), ext.cells.begin());
                CHECK(is_prenecklace(x) == is_canonical(ext));
            }
        }
    }
}

TEST_CASE("successor of an arbitrary word is the least necklace above it") {
    std::mt19937 rng(5);
    for (const auto& n : testing::grid_sizes(8, 3, 2)) {
        auto c = census(n, 2);
        auto all = c.necklaces();
        for (int t = 0; t < 40; ++t) {
            Word x(n, 2);
            for (auto& s : x.cells) s = static_cast<uint8_t>(1 + rng() % 2);
            auto it = std::find_if(all.begin(), all.end(), [&](const Word& v) { return compare(v, x) > 0; });
            auto got = next_necklace(x);
            CHECK(got.has_value() == (it != all.end()));
            if (got && it != all.end()) CHECK(*got == *it);
        }
    }
}

TEST_CASE("next_class walks slice classes") {
    CHECK(next_class(w("ab")) == w("bb"));
    CHECK_FALSE(next_class(w("bb")).has_value());
    CHECK(next_class(w("[aa;bb]")) == w("[ab;ab]"));
}
