#include <set>

#include "doctest.h"
#include "grid.hpp"
#include "necklace/io.hpp"
#include "necklace/oracle.hpp"

using namespace necklace;

namespace {
Word w(const std::string& s, int q = 2) { return parse_word(s, std::nullopt, q); }
}  // namespace

TEST_CASE("index function") {
    CHECK(index_of({0, 0}, {2, 2}) == 0);
    CHECK(index_of({1, 0}, {2, 2}) == 1);
    CHECK(index_of({1, 1}, {2, 3}) == 3);
    for (int i = 0; i < 24; ++i) CHECK(index_of(translation_at(i, {2, 3, 4}), {2, 3, 4}) == i);
}

TEST_CASE("translate") {
    CHECK(render_inline(translate(w("ab"), {1})) == "ba");
    CHECK(translate(w("[aa;ab]"), {0, 1}) == w("[ab;aa]"));
    Word x = w("[abc;cab;bba;aca]", 3);
    for (int g = 0; g < 12; ++g) {
        Translation t = translation_at(g, x.size);
        Translation inv = {(3 - t[0]) % 3, (4 - t[1]) % 4};
        CHECK(translate(translate(x, t), inv) == x);
    }
}

TEST_CASE("compare orders slices by class then offset") {
    CHECK(compare(w("[ab;ab]"), w("[ab;ab]")) == 0);
    CHECK(compare(w("[aa;bb]"), w("[ab;ab]")) < 0);
    // ab and ba are the same class; ab needs no shift so it is smaller.
    CHECK(compare(w("[ab;ab]"), w("[ba;ab]")) < 0);
    // Any slice of a smaller class wins regardless of offset.
    CHECK(compare(w("[ba;aa]"), w("[bb;aa]")) < 0);
}

TEST_CASE("canonicalize") {
    auto c = canonicalize(w("ba"));
    CHECK(c.word == w("ab"));
    CHECK(c.offset == Translation{1});
    auto c2 = canonicalize(w("[ab;aa]"));
    CHECK(c2.word == w("[aa;ab]"));
    CHECK(c2.offset == Translation{0, 1});
    auto c3 = canonicalize(c2.word);
    CHECK(c3.word == c2.word);
    CHECK(c3.offset_index == 0);
}

TEST_CASE("period and symmetry") {
    auto p = period(w("abab"));
    CHECK(p.size == SizeVec{2});
    CHECK(p.base == w("ab"));
    CHECK(period(w("[ab;ba]")).size == SizeVec{2, 2});
    auto p2 = period(w("[aa;bb]"));
    CHECK(p2.size == SizeVec{1, 2});
    CHECK(p2.base == parse_word("[a;b]"));

    auto s = symmetry(w("[ab;ba]"));
    CHECK(s.fixing == std::vector<Translation>{{0, 0}, {1, 1}});
    CHECK(s.distinct == 2);
    CHECK_FALSE(is_atranslational(w("[ab;ba]")));
    CHECK(is_aperiodic(w("[ab;ba]")));
    CHECK(symmetry(w("[aa;ab]")).fixing == std::vector<Translation>{{0, 0}});
    CHECK(is_atranslational(w("[aa;ab]")));
    auto s3 = symmetry(w("aaaa"));
    CHECK(s3.fixing.size() == 4);
    CHECK(s3.distinct == 1);
}

TEST_CASE("parikh, slice, subword") {
    CHECK(parikh(w("aaab")) == std::vector<int>{3, 1});
    CHECK(parikh(w("[ab;ba]")) == std::vector<int>{2, 2});
    CHECK(slice(w("[aa;ab]"), 1) == w("ab"));
    CHECK(subword(w("aaab"), {3}, {2}) == w("ba"));
    CHECK(subword(w("[ab;ba]"), {1, 1}, {2, 1}).cells == w("ab").cells);
}

TEST_CASE("canonical forms are orbit minima and idempotent") {
    for (const auto& n : testing::grid_sizes(8)) {
        auto c = census(n, 2);
        for (size_t i = 0; i < c.size_count(); ++i) {
            Word x = c.word(i);
            CHECK(is_canonical(x));
            for (int g = 0; g < x.count(); ++g) CHECK(compare(x, translate_index(x, g)) <= 0);
            auto cc = canonicalize(x);
            CHECK(cc.word == x);
            Word y = translate_index(x, x.count() - 1);
            CHECK(canonicalize(y).word == x);
            CHECK(translate(y, canonicalize(y).offset) == x);
            CHECK(parikh(y) == parikh(x));
            // Aperiodic implies no proper tiling; atranslational implies aperiodic.
            if (is_atranslational(x)) CHECK(is_aperiodic(x));
            auto sym = symmetry(x);
            CHECK(sym.distinct * static_cast<long long>(sym.fixing.size()) == x.count());
        }
    }
}
