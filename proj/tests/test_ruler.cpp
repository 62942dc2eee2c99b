#include <doctest.h>

#include <algorithm>
#include <random>

#include "gsr/random.hpp"
#include "gsr/ruler.hpp"

using namespace gsr;

TEST_CASE("is_golomb on the definitional examples") {
    CHECK(is_golomb(Ruler({0, 1, 3})));
    CHECK_FALSE(is_golomb(Ruler({0, 1, 2})));
    CHECK(is_golomb(Ruler{}));
    CHECK(is_golomb(Ruler({5})));
    CHECK(is_golomb(Ruler({2, 7})));
}

TEST_CASE("construction sorts and rejects duplicates") {
    const Ruler r({3, 0, 1});
    CHECK(r.marks() == std::vector<Mark>{0, 1, 3});
    CHECK_THROWS_AS(Ruler({1, 1, 2}), input_error);
}

TEST_CASE("canonical_form shifts to zero and preserves structure") {
    CHECK(canonical_form(Ruler({5, 6, 8})) == Ruler({0, 1, 3}));
    CHECK(canonical_form(Ruler({0, 1, 3})) == Ruler({0, 1, 3}));
    CHECK(canonical_form(Ruler({100})) == Ruler({0}));
    CHECK_THROWS_AS(canonical_form(Ruler{}), input_error);
}

TEST_CASE("length") {
    CHECK(length(Ruler({0, 1, 3})) == 3);
    CHECK(length(Ruler({5, 6, 8})) == 3);
    CHECK(length(Ruler({7})) == 0);
    CHECK_THROWS_AS(length(Ruler{}), input_error);
}

TEST_CASE("is_perfect") {
    CHECK(is_perfect(Ruler({0, 1, 3})));
    CHECK_FALSE(is_perfect(Ruler({0, 1, 4})));
    CHECK(is_perfect(Ruler({0, 1})));
    CHECK_THROWS_AS(is_perfect(Ruler({7})), input_error);
}

TEST_CASE("shift and scale invariance of the Golomb property") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Ruler r = random_ruler(rng, 2 + rng() % 8, 40);
        const bool golomb = is_golomb(r);
        for (Mark c : {Mark{1}, Mark{2}, Mark{17}}) {
            std::vector<Mark> shifted, scaled;
            for (Mark m : r.marks()) {
                shifted.push_back(m + c);
                scaled.push_back(m * c);
            }
            CHECK(is_golomb(Ruler(shifted)) == golomb);
            CHECK(is_golomb(Ruler(scaled)) == golomb);
        }
        CHECK(is_golomb(canonical_form(r)) == golomb);
        CHECK(length(canonical_form(r)) == length(r));
    }
}

TEST_CASE("is_golomb equals difference-multiset uniqueness") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Ruler r = random_ruler(rng, 1 + rng() % 10, 50);
        std::vector<Mark> diffs;
        for (std::size_t i = 0; i < r.size(); ++i) {
            for (std::size_t j = i + 1; j < r.size(); ++j) {
                diffs.push_back(r.marks()[j] - r.marks()[i]);
            }
        }
        std::sort(diffs.begin(), diffs.end());
        const bool unique = std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
        CHECK(is_golomb(r) == unique);
    }
}

TEST_CASE("text parsing handles comments, whitespace and errors") {
    const Ruler r = parse_ruler_text("# sample ruler\n0 1\n\t4  # inline note\n9\n11");
    CHECK(r == Ruler({0, 1, 4, 9, 11}));
    CHECK(parse_ruler_text("") == Ruler{});
    CHECK(parse_ruler_text("# only a comment\n") == Ruler{});
    CHECK_THROWS_AS(parse_ruler_text("1 2 x"), input_error);
    CHECK_THROWS_AS(parse_ruler_text("-4"), input_error);
    CHECK_THROWS_AS(parse_ruler_text("3 3"), input_error);
    CHECK_THROWS_AS(parse_ruler_text("99999999999999999999999"), guard_error);
    CHECK(parse_ruler_text("18446744073709551615") == Ruler({UINT64_MAX}));
}

TEST_CASE("format_ruler round-trips") {
    const Ruler r({0, 2, 7, 13});
    CHECK(parse_ruler_text(format_ruler(r)) == r);
    CHECK(format_ruler(Ruler{}).empty());
}
