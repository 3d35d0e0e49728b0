#pragma once

/**
 * @file generating.hpp
 * @brief Closed forms and generating functions for bounded permutations.
 *
 *   q_integer(i)            [i]_q = 1 + q + ... + q^(i-1)
 *   q_factorial(k)          [1]_q [2]_q ... [k]_q
 *   joint_gf_product(n,k)   (t + [k+1]_q - 1)^(n-k) * prod_{i<=k} (t + [i]_q - 1),
 *                           the joint (inv, lmax) and (DIS, cyc) distribution over A(n,k)
 *   inv_gf(n,k)             [k+1]_q^(n-k) [k]_q!, the inv distribution over A(n,k)
 *   ballot_number(n,k)      C_{n,k} = (n-k+1)/(n+1) * binom(n+k, k) = |A_{n,k}(213)|
 *   narayana(n,m)           Dyck paths of semilength n with m peaks
 *   f0_tilde_series(N)      sum N_{n,m} (zq)^n p^(m-1), no radicals involved
 *   g_series(N)             sum over A_{n,k}(213) of p^des q^k z^n, from the
 *                           rational expression in f0_tilde
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

#include "error.hpp"
#include "polynomial.hpp"
#include "series.hpp"

namespace boundperm {

inline BivariatePolynomial q_integer(int i) {
    detail::require(i >= 1, "q_integer requires i >= 1, got " + std::to_string(i));
    BivariatePolynomial out;
    for (int j = 0; j < i; ++j) out.add_term({j, 0}, 1);
    return out;
}

inline BivariatePolynomial q_factorial(int k) {
    detail::require(k >= 0, "q_factorial requires k >= 0");
    BivariatePolynomial out(1);
    for (int i = 1; i <= k; ++i) out *= q_integer(i);
    return out;
}

namespace detail {

inline void require_bounded_range(std::int64_t n, std::int64_t k) {
    require(n >= 0 && k >= 0 && k <= n,
            "expected 0 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
}

}  // namespace detail

inline BivariatePolynomial joint_gf_product(int n, int k) {
    detail::require_bounded_range(n, k);
    const auto t = BivariatePolynomial::variable(var::t);
    auto factor = [&](int i) { return t + q_integer(i) - BivariatePolynomial(1); };
    BivariatePolynomial out = pow(factor(k + 1), static_cast<unsigned>(n - k));
    for (int i = 1; i <= k; ++i) out *= factor(i);
    return out;
}

inline BivariatePolynomial inv_gf(int n, int k) {
    detail::require_bounded_range(n, k);
    return pow(q_integer(k + 1), static_cast<unsigned>(n - k)) * q_factorial(k);
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i: it is i * binom(n-k+i, i).
        result = detail::checked_mul(result, n - k + i) / i;
    }
    return result;
}

inline std::int64_t ballot_number(std::int64_t n, std::int64_t k) {
    detail::require_bounded_range(n, k);
    return detail::checked_mul(n - k + 1, binomial(n + k, k)) / (n + 1);
}

inline std::int64_t narayana(std::int64_t n, std::int64_t m) {
    detail::require(m >= 1 && m <= n, "narayana requires 1 <= m <= n, got n = " + std::to_string(n) +
                                          ", m = " + std::to_string(m));
    return detail::checked_mul(binomial(n, m), binomial(n, m - 1)) / n;
}

inline TruncatedSeries f0_tilde_series(std::size_t order) {
    TruncatedSeries out(order);
    const auto top = static_cast<std::int64_t>(order);
    for (std::int64_t n = 1; n <= top; ++n)
        for (std::int64_t m = 1; m <= n; ++m)
            out.add(static_cast<int>(m - 1), static_cast<int>(n), static_cast<int>(n), narayana(n, m));
    return out;
}

/// (1 - pqz - (1-z)q + (zq - pqz - q) F0~) / ((1 - q) - z(1 + pq - q)).
/// The denominator has constant term 1; every coefficient with
/// deg_z <= order is exact.
inline TruncatedSeries g_series(std::size_t order) {
    auto m = [order](int dp, int dq, int dz, std::int64_t c) {
        return TruncatedSeries::monomial(order, dp, dq, dz, c);
    };
    const auto one = m(0, 0, 0, 1);
    const auto numerator = one - m(1, 1, 1, 1) - m(0, 1, 0, 1) + m(0, 1, 1, 1) +
                           (m(0, 1, 1, 1) - m(1, 1, 1, 1) - m(0, 1, 0, 1)) * f0_tilde_series(order);
    const auto denominator = one - m(0, 0, 1, 1) - m(1, 1, 1, 1) - m(0, 1, 0, 1) + m(0, 1, 1, 1);
    return numerator * denominator.inverse();
}

// Radical forms evaluated in floating point, for numeric cross-checks.
inline double f0_tilde_closed_form(double p, double q, double z) {
    const double x = z * q;
    const double root = std::sqrt((1.0 + x * (1.0 - p)) * (1.0 + x * (1.0 - p)) - 4.0 * x);
    return (1.0 - x * (1.0 + p) - root) / (2.0 * p * q * z);
}

inline double g_closed_form(double p, double q, double z) {
    const double f0 = f0_tilde_closed_form(p, q, z);
    return (1.0 - p * q * z - (1.0 - z) * q + (z * q - p * q * z - q) * f0) /
           (1.0 - z - p * q * z - (1.0 - z) * q);
}

}  // namespace boundperm
