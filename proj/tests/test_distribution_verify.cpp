#include <catch_amalgamated.hpp>

#include <boundperm/distribution.hpp>
#include <boundperm/generating.hpp>
#include <boundperm/verify.hpp>

#include "oracles.hpp"

using namespace boundperm;

TEST_CASE("statistic names round trip") {
    for (auto s : kAllStatistics) CHECK(parse_statistic(statistic_name(s)) == s);
    CHECK_THROWS_AS(parse_statistic("maj"), invalid_input);
}

TEST_CASE("distribution tables") {
    const SetSpec a21{Family::bounded_drop, 2, 1, std::nullopt};
    const auto d = distribution(a21, {Statistic::inv, Statistic::lmax});
    CHECK(d.total == 2);
    CHECK(to_string(d.to_bivariate()) == "t^2 + q*t");
    CHECK(d.to_csv() == "inv,lmax,count\n0,2,1\n1,1,1\n");
    CHECK(d.to_json().dump() ==
          R"({"stats":["inv","lmax"],"total":2,"table":[{"key":[0,2],"count":1},{"key":[1,1],"count":1}]})");

    const auto a41 = distribution({Family::bounded_drop, 4, 1, std::nullopt}, {Statistic::inv});
    CHECK(a41.table == std::map<Distribution::Key, std::uint64_t>{{{0}, 1}, {{1}, 3}, {{2}, 3}, {{3}, 1}});
}

TEST_CASE("equidistribution over A(n,k) through the distribution API") {
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const SetSpec spec{Family::bounded_drop, n, k, std::nullopt};
            const auto left = distribution(spec, {Statistic::inv, Statistic::lmax});
            const auto right = distribution(spec, {Statistic::dis, Statistic::cyc});
            CHECK(left.same_counts(right));
            const auto mirror = distribution({Family::bounded_lift, n, k, std::nullopt}, {Statistic::inv, Statistic::rmin});
            CHECK(mirror.to_bivariate() == left.to_bivariate());
        }
}

TEST_CASE("vpk is restricted to ballot sequences") {
    const auto d = distribution({Family::ballot, 3, 2, std::nullopt}, {Statistic::vpk});
    CHECK(d.total == 5);
    CHECK_THROWS_AS(distribution({Family::ballot, 3, 2, std::nullopt}, {Statistic::inv}), invalid_input);
    CHECK_THROWS_AS(distribution({Family::all, 3, 0, std::nullopt}, {Statistic::vpk}), invalid_input);
    CHECK_THROWS_AS(distribution({Family::all, 3, 0, std::nullopt}, {}), invalid_input);
}

TEST_CASE("frozen ballot table agrees with the closed form") {
    for (std::size_t n = 0; n <= 7; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(kBallotTable[n][k] == static_cast<std::int64_t>(oracle::ballot_words(n, k).size()));
}

TEST_CASE("every check passes at the default budget") {
    for (const auto& r : run_all_checks(7)) {
        INFO(r.check);
        CHECK(r.pass);
        CHECK(r.instances > 0);
        CHECK_FALSE(r.witness);
    }
}

TEST_CASE("check budget is enforced") {
    CHECK_THROWS_AS(run_check("counts", 9), invalid_input);
    CHECK_THROWS_AS(run_check("counts", 11, true), invalid_input);
    CHECK_THROWS_AS(run_check("nope", 3), invalid_input);
    CHECK(run_check("counts", 9, true).pass);
}

TEST_CASE("failure reports carry a witness") {
    Report report;
    report.check = "demo";
    report.max_n = 3;
    detail::Tally tally(report);
    CHECK(tally.expect_eq(std::int64_t{1}, std::int64_t{1}, "one", 1, std::nullopt, "x"));
    CHECK_FALSE(tally.expect_eq(std::int64_t{2}, std::int64_t{3}, "two", 2, 1, "y"));
    CHECK_FALSE(tally.expect_eq(std::int64_t{4}, std::int64_t{5}, "later", 3, 1, "z"));
    CHECK(report.instances == 2);
    const auto j = report.to_json();
    CHECK(j["status"] == "fail");
    CHECK(j["witness"]["property"] == "two");
    CHECK(j["witness"]["expected"] == "2");
    CHECK(j["witness"]["actual"] == "3");
    CHECK(j["witness"]["k"] == 1);
}
