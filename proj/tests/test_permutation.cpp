#include <catch_amalgamated.hpp>

#include <boundperm/permutation.hpp>
#include <boundperm/text.hpp>

#include "oracles.hpp"

using namespace boundperm;

TEST_CASE("construction rejects non-permutations") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), invalid_input);
    CHECK_THROWS_AS(Permutation({0, 1}), invalid_input);
    CHECK_THROWS_AS(Permutation({1, 4, 2}), invalid_input);
    CHECK_THROWS_WITH(Permutation({2, 3, 2}), Catch::Matchers::ContainsSubstring("duplicate value 2"));
    CHECK_NOTHROW(Permutation(std::vector<int>{}));
}

TEST_CASE("text input forms agree") {
    CHECK(parse_permutation("34152") == Permutation{3, 4, 1, 5, 2});
    CHECK(parse_permutation("3,4,1,5,2") == Permutation{3, 4, 1, 5, 2});
    CHECK(parse_permutation(" 3 4 1 5 2 ") == Permutation{3, 4, 1, 5, 2});
    CHECK(parse_permutation("10 1 2 3 4 5 6 7 8 9").size() == 10);
    CHECK_THROWS_AS(parse_permutation("3x"), invalid_input);
    CHECK_THROWS_AS(parse_permutation("-1,1"), invalid_input);
}

TEST_CASE("inverse and composition") {
    CHECK(inverse(Permutation{3, 4, 1, 5, 2}) == Permutation{3, 5, 1, 2, 4});
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& w : oracle::all_words(n)) {
            const Permutation p(w);
            CHECK(inverse(p) == Permutation(oracle::invert(w)));
            CHECK(compose(p, inverse(p)) == Permutation::identity(n));
        }
}

TEST_CASE("statistics on fixed words") {
    const Permutation sigma{5, 7, 1, 4, 9, 2, 6, 3, 8};
    const Permutation image{5, 7, 3, 2, 9, 1, 4, 8, 6};
    CHECK(inv_count(sigma) == 16);
    CHECK(des_count(sigma) == 3);
    CHECK(maxdrop(sigma) == 5);
    CHECK(maxlift(sigma) == 5);
    CHECK(inv_count(image) == 17);
    CHECK(sorting_index(image) == 16);
    CHECK(maxdrop(image) == 5);
    CHECK(maxlift(image) == 5);
    const Permutation pi{8, 3, 4, 7, 5, 6, 1, 2};
    CHECK(des_count(pi) == 3);
    CHECK(maxdrop(pi) == 6);
    CHECK(maxdrop(Permutation::identity(4)) == 0);
    CHECK(maxlift(Permutation::identity(4)) == 0);
}

TEST_CASE("marker sets") {
    const auto m = marker_sets(Permutation{5, 7, 1, 4, 9, 2, 6, 3, 8});
    CHECK(m.lmal == std::vector<int>{5, 7, 9});
    CHECK(m.lmap == std::vector<int>{1, 2, 5});
    CHECK(m.rmil == std::vector<int>{1, 2, 3, 8});
    CHECK(m.lmax() == 3);
    CHECK(m.rmin() == 4);
    // strict comparisons on words with repeats
    const std::vector<int> word{2, 2, 1, 3, 3};
    const auto w = marker_sets(word);
    CHECK(w.lmap == std::vector<int>{1, 4});
    CHECK(w.rmip == std::vector<int>{3, 5});
}

TEST_CASE("cycle decomposition") {
    const auto c = cycle_decomposition(Permutation{5, 7, 3, 2, 9, 1, 4, 8, 6});
    CHECK(c.cycles == std::vector<std::vector<int>>{{1, 5, 9, 6}, {2, 7, 4}, {3}, {8}});
    CHECK(c.minima == std::vector<int>{1, 2, 3, 8});
    CHECK(cyc_count(Permutation::identity(5)) == 5);
}

TEST_CASE("sorting index matches exhaustive decomposition search") {
    CHECK(sorting_index(Permutation{5, 7, 3, 2, 9, 1, 4, 8, 6}) == 16);
    CHECK(sorting_index(Permutation{2, 1}) == 1);
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& w : oracle::all_words(n)) {
            const Permutation p(w);
            const auto expected = oracle::sorting_index_by_search(w);
            REQUIRE(expected);
            CHECK(sorting_index(p) == *expected);
            CHECK(dis(p) == *oracle::sorting_index_by_search(oracle::invert(w)));
            // replaying the transpositions on the identity rebuilds the word
            std::vector<int> cur(n);
            for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<int>(i + 1);
            for (const auto& [i, j] : sorting_transpositions(p)) std::swap(cur[i - 1], cur[j - 1]);
            CHECK(cur == w);
        }
}

TEST_CASE("vnw counts non-weak excedances before the last place") {
    CHECK(vnw(Permutation{3, 1, 4, 5, 2, 7, 6, 9, 8}) == 3);
    CHECK(vnw(Permutation{1}) == 0);
    CHECK(vnw(Permutation{2, 1}) == 0);
    CHECK_THROWS_AS(vnw(Permutation(std::vector<int>{})), invalid_input);
}

TEST_CASE("inverse swaps maxdrop and maxlift") {
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& w : oracle::all_words(n)) {
            const Permutation p(w);
            CHECK(maxdrop(p) == oracle::max_drop(w));
            CHECK(maxlift(p) == maxdrop(inverse(p)));
            CHECK(inv_count(p) == oracle::inversions(w));
        }
}
