#include "doctest.h"
#include "grid.hpp"
#include "necklace/io.hpp"
#include "necklace/numtheory.hpp"
#include "necklace/oracle.hpp"
#include "necklace/rank_parts.hpp"

using namespace necklace;

namespace {
Word w(const std::string& s, int q = 2) { return parse_word(s, std::nullopt, q); }
}  // namespace

TEST_CASE("beta and ns base cases") {
    Word x = w("[aa;ab;bb]");
    for (const auto& f : divisor_vectors(x.size)) {
        CHECK(beta(x, 0, 0, f) == 1);
        for (int i = 1; i <= f.back(); ++i) CHECK(beta(x, i, i, f) == 0);
    }
    CHECK(ns(w("abb"), 2, {3}) == 0);
    CHECK(ns(w("abb"), 0, {3}) == 1);
    CHECK(beta(w("aab"), 2, 0, {3}) == oracle_beta(w("aab"), 2, 0, {3}));
}

TEST_CASE("beta and ns equal direct enumeration") {
    for (int q : {2, 3}) {
        for (const auto& n : testing::grid_sizes(q == 2 ? 8 : 6, 3, 2)) {
            SizeVec cross(n.begin(), n.end() - 1);
            if (volume(cross) > 4) continue;
            CAPTURE(testing::size_name(n));
            auto c = census(n, q);
            for (const auto& x : c.necklaces())
                for (const auto& f : divisor_vectors(n))
                    for (int j = 0; j < f.back(); ++j) {
                        CHECK(ns(x, j, f) == oracle_ns(x, j, f));
                        for (int i = j; i <= f.back(); ++i) CHECK(beta(x, i, j, f) == oracle_beta(x, i, j, f));
                    }
        }
    }
}

TEST_CASE("slice recursion holds for single-cell slices") {
    for (const auto& x : census({6}, 2).necklaces())
        for (int f : {1, 2, 3, 6})
            for (int j = 0; j < f; ++j)
                for (int i = j; i <= f; ++i) CHECK(beta_recursive(x, i, j, {f}) == beta(x, i, j, {f}));
}

TEST_CASE("seam helpers") {
    // The first slice of [ab;aa] is fixed by no cross shift.
    CHECK(theta_count(w("[ab;aa]"), 1) == 2);
    CHECK(theta_count(w("[aa;ab]"), 1) == 1);
    CHECK(theta_count(w("[aa;ab]"), 0) == 1);
    for (const auto& x : census({2, 4}, 2).necklaces())
        if (!is_aperiodic(x) || is_atranslational(x)) CHECK(u_correction(x) == 0);
    CHECK(s_count(0, 1, {2, 2}) == 0);
    CHECK(s_count(1, 1, {2, 2}) == 0);
    CHECK(s_count(1, 2, {2, 2}) == 1);
    CHECK(s_count(0, 2, {3, 2}) == 0);
}
