#include "doctest.h"
#include "grid.hpp"
#include "necklace/io.hpp"
#include "necklace/oracle.hpp"

using namespace necklace;

TEST_CASE("inline and JSON forms round trip") {
    for (int q : {2, 3, 30}) {
        for (const auto& n : std::vector<SizeVec>{{1}, {5}, {2, 3}, {3, 1, 2}}) {
            Word x(n, q);
            for (int i = 0; i < x.count(); ++i) x.cells[i] = static_cast<uint8_t>(1 + (i * 7 + 3) % q);
            CHECK(word_from_json(word_to_json(x)) == x);
            CHECK(parse_word(word_to_json(x).dump(), std::nullopt, std::nullopt) == x);
            CHECK(parse_word(render_inline(x), n, q) == x);
        }
    }
}

TEST_CASE("text parsing") {
    Word x = parse_word("[ab;ba]");
    CHECK(x.size == SizeVec{2, 2});
    CHECK(x.cells == std::vector<uint8_t>{1, 2, 2, 1});
    CHECK(parse_word("ab;ba") == x);
    CHECK(parse_word("ab\nba\n") == x);
    CHECK(parse_word("abc").q == 3);
    CHECK(parse_word("1,30,2", std::nullopt, 30).cells == std::vector<uint8_t>{1, 30, 2});
    CHECK(parse_word("aabbaabb", SizeVec{2, 2, 2}).size == SizeVec{2, 2, 2});
    CHECK(parse_size("2,3,4") == SizeVec{2, 3, 4});
    CHECK(parse_size("(2,3)") == SizeVec{2, 3});
    CHECK_THROWS_AS(parse_word("[ab;b]"), InvalidInput);
    CHECK_THROWS_AS(parse_word("abc", std::nullopt, 2), InvalidInput);
    CHECK_THROWS_AS(parse_size("2,0"), InvalidInput);
    CHECK_THROWS_AS(word_from_json(nlohmann::json::parse(R"({"q":2,"size":[2],"data":[1]})")), InvalidInput);
}
