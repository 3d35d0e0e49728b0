#include <catch_amalgamated.hpp>

#include <algorithm>

#include <boundperm/enumerate.hpp>
#include <boundperm/pattern.hpp>

#include "oracles.hpp"

using namespace boundperm;

TEST_CASE("pattern text forms") {
    CHECK(parse_pattern("213").to_string() == "213");
    CHECK(parse_pattern("2,1,3") == parse_pattern("213"));
    CHECK(parse_pattern("2_13_").adjacency() == std::vector<int>{2});
    CHECK(parse_pattern("_13_2").adjacency() == std::vector<int>{1});
    CHECK(parse_pattern("213", {2}) == parse_pattern("2_13_"));
    CHECK(parse_pattern("2_13_").to_string() == "2_13_");
    CHECK_THROWS_AS(parse_pattern("2_13"), invalid_input);
    CHECK_THROWS_AS(parse_pattern("223"), invalid_input);
    CHECK_THROWS_AS(parse_pattern("213", {3}), invalid_input);
    CHECK_THROWS_AS(parse_pattern(""), invalid_input);
}

TEST_CASE("occurrence counts match subset scan") {
    const std::vector<std::pair<std::string, std::vector<int>>> patterns{
        {"213", {}}, {"132", {}}, {"321", {}}, {"2_13_", {2}}, {"_13_2", {1}}, {"_12_", {1}}, {"1324", {}},
        {"_31_42", {1}}};
    for (const auto& [text, adjacency] : patterns) {
        const auto pattern = parse_pattern(text);
        std::vector<int> letters(pattern.letters().begin(), pattern.letters().end());
        for (std::size_t n = 0; n <= 6; ++n)
            for (const auto& w : oracle::all_words(n)) {
                const Permutation p(w);
                const auto expected = oracle::occurrences(w, letters, adjacency);
                CHECK(occurrence_count(p, pattern) == expected);
                CHECK(contains(p, pattern) == (expected > 0));
            }
    }
}

TEST_CASE("family enumeration equals filtering all permutations") {
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<Permutation> drop, lift;
            for (const auto& w : oracle::all_words(n)) {
                if (oracle::max_drop(w) <= static_cast<int>(k)) drop.emplace_back(w);
                if (oracle::max_lift(w) <= static_cast<int>(k)) lift.emplace_back(w);
            }
            CHECK(enumerate({Family::bounded_drop, n, k, std::nullopt}) == drop);
            CHECK(enumerate({Family::bounded_lift, n, k, std::nullopt}) == lift);
            CHECK(count({Family::bounded_drop, n, k, std::nullopt}) == drop.size());
        }
}

TEST_CASE("s321 family is 321-avoiders of length n+1 ending in k+1") {
    const auto p321 = parse_pattern("321");
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<Permutation> expected;
            for (const auto& w : oracle::all_words(n + 1))
                if (w.back() == static_cast<int>(k + 1) && oracle::occurrences(w, {3, 2, 1}, {}) == 0)
                    expected.emplace_back(w);
            const SetSpec spec{Family::ending_in, n, k, p321};
            CHECK(spec.length() == n + 1);
            CHECK(enumerate(spec) == expected);
        }
}

TEST_CASE("enumeration is lexicographic and deterministic") {
    const SetSpec spec{Family::bounded_drop, 5, 2, parse_pattern("213")};
    const auto first = enumerate(spec);
    CHECK(std::is_sorted(first.begin(), first.end()));
    CHECK(first == enumerate(spec));
}

TEST_CASE("set specifications are validated") {
    CHECK_THROWS_AS(enumerate({Family::bounded_drop, 3, 4, std::nullopt}), invalid_input);
    CHECK_THROWS_AS(count({Family::ballot, 3, 1, parse_pattern("213")}), invalid_input);
    CHECK_THROWS_AS(enumerate({Family::ballot, 3, 1, std::nullopt}), invalid_input);
    CHECK(count({Family::ballot, 3, 1, std::nullopt}) == 3);
    CHECK(count({Family::all, 4, 0, std::nullopt}) == 24);
    CHECK(parse_family("A") == Family::bounded_drop);
    CHECK_THROWS_AS(parse_family("B"), invalid_input);
}
