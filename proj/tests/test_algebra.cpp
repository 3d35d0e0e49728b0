#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <boundperm/enumerate.hpp>
#include <boundperm/generating.hpp>
#include <boundperm/pattern.hpp>
#include <boundperm/polynomial.hpp>
#include <boundperm/series.hpp>

#include "oracles.hpp"

using namespace boundperm;

namespace {

BivariatePolynomial q_pow(int e, std::int64_t c = 1) { return BivariatePolynomial::monomial({e, 0}, c); }

int lr_maxima(const Permutation& p) {
    int best = 0, c = 0;
    for (int x : p)
        if (x > best) {
            best = x;
            ++c;
        }
    return c;
}

}  // namespace

TEST_CASE("polynomial arithmetic and formatting") {
    const auto q = BivariatePolynomial::variable(var::q);
    const auto t = BivariatePolynomial::variable(var::t);
    CHECK(to_string(BivariatePolynomial{}) == "0");
    CHECK(to_string(BivariatePolynomial{7}) == "7");
    CHECK(to_string(t * t + q * t) == "t^2 + q*t");
    CHECK(to_string((q + t) * (q - t)) == "-t^2 + q^2");
    CHECK(to_string(BivariatePolynomial{-3}) == "-3");
    CHECK(pow(q + 1, 3) == q * q * q + q * q * 3 + q * 3 + 1);
    CHECK((q + t).evaluate({2, 5}) == 7);
    CHECK((q * t + q).substitute(var::t, 1) == q * 2);
    CHECK((q - q).is_zero());
}

TEST_CASE("checked arithmetic reports overflow") {
    const auto big = BivariatePolynomial{std::numeric_limits<std::int64_t>::max()};
    CHECK_THROWS_AS(big + BivariatePolynomial{1}, std::overflow_error);
    CHECK_THROWS_AS(big * BivariatePolynomial{2}, std::overflow_error);
}

TEST_CASE("q-integers and q-factorials") {
    CHECK(q_integer(1) == BivariatePolynomial{1});
    CHECK(q_integer(3) == q_pow(0) + q_pow(1) + q_pow(2));
    CHECK(q_factorial(3) == q_pow(0) + q_pow(1, 2) + q_pow(2, 2) + q_pow(3));
    CHECK(q_factorial(0) == BivariatePolynomial{1});
    CHECK_THROWS_AS(q_integer(0), invalid_input);
}

TEST_CASE("product formulas match brute force over A(n,k)") {
    CHECK(to_string(joint_gf_product(2, 1)) == "t^2 + q*t");
    CHECK(inv_gf(4, 1) == pow(q_pow(0) + q_pow(1), 3));
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            BivariatePolynomial inv_lmax, inv_only;
            for (const auto& p : enumerate({Family::bounded_drop, std::size_t(n), std::size_t(k), std::nullopt})) {
                const int inv = static_cast<int>(inv_count(p));
                inv_lmax.add_term({inv, lr_maxima(p)}, 1);
                inv_only.add_term({inv, 0}, 1);
            }
            CHECK(joint_gf_product(n, k) == inv_lmax);
            CHECK(inv_gf(n, k) == inv_only);
        }
    CHECK_THROWS_AS(joint_gf_product(2, 3), invalid_input);
    CHECK_THROWS_AS(inv_gf(-1, 0), invalid_input);
}

TEST_CASE("ballot and Narayana numbers") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(ballot_number(n, k) == static_cast<std::int64_t>(oracle::ballot_words(n, k).size()));
            CHECK(binomial(n, k) == oracle::binom(n, k));
        }
    for (int n = 1; n <= 7; ++n)
        for (const auto& [peaks, count] : oracle::dyck_peaks(n)) CHECK(narayana(n, peaks) == count);
    CHECK(narayana(4, 2) == 6);
    CHECK_THROWS_AS(narayana(3, 0), invalid_input);
}

TEST_CASE("truncated series arithmetic") {
    const auto one = TruncatedSeries::constant(4, 1);
    const auto z = TruncatedSeries::monomial(4, 0, 0, 1);
    const auto geometric = (one - z).inverse();
    for (int d = 0; d <= 4; ++d) CHECK(geometric.coefficient(0, 0, d) == 1);
    CHECK(geometric.coefficient(0, 0, 5) == 0);
    CHECK(((one - z) * geometric) == one);
    CHECK(TruncatedSeries::monomial(2, 3, 0, 0).coefficient(3, 0, 0) == 0);  // outside the box
    CHECK_THROWS_AS(TruncatedSeries::constant(2, 2).inverse(), std::domain_error);
    CHECK_THROWS(one + TruncatedSeries::constant(3, 1));
}

TEST_CASE("trivariate series counts 213-avoiders by des, bound and size") {
    constexpr int order = 7;
    const auto g = g_series(order);
    const auto p213 = parse_pattern("213");
    for (int n = 0; n <= order; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<std::int64_t> by_des(order + 1, 0);
            for (const auto& p : enumerate({Family::bounded_drop, std::size_t(n), std::size_t(k), p213}))
                ++by_des[static_cast<std::size_t>(des_count(p))];
            for (int d = 0; d <= order; ++d) CHECK(g.coefficient(d, k, n) == by_des[d]);
        }
}

TEST_CASE("F0 series agrees with its radical form") {
    for (const auto& [p, q, z] : std::vector<std::array<double, 3>>{{0.5, 1.0 / 3.0, 0.2}, {1.0, 0.5, 0.3}}) {
        const double series = f0_tilde_series(20).evaluate(p, q, z);
        CHECK(std::abs(series - f0_tilde_closed_form(p, q, z)) < 1e-6);
    }
    const double g = g_series(20).evaluate(0.5, 1.0 / 3.0, 0.2);
    CHECK(std::abs(g - g_closed_form(0.5, 1.0 / 3.0, 0.2)) < 1e-6);
}

TEST_CASE("series text form") {
    CHECK(g_series(1).to_string() == "q*z + z + 1");
}
