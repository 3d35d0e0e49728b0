#pragma once

// Truncated power series in p, q, z with exact integer coefficients.
//
// Storage is dense: every exponent of every variable runs over 0..order.
// All ring operations discard monomials beyond that box, which is an ideal,
// so every retained coefficient is exact.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace boundperm {

class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0) : order_(order), coeffs_(cube(order), 0) {}

    static TruncatedSeries constant(std::size_t order, std::int64_t c) {
        TruncatedSeries s(order);
        s.add(0, 0, 0, c);
        return s;
    }

    static TruncatedSeries monomial(std::size_t order, int dp, int dq, int dz, std::int64_t c = 1) {
        TruncatedSeries s(order);
        s.add(dp, dq, dz, c);
        return s;
    }

    std::size_t order() const noexcept { return order_; }

    // Coefficient of p^dp q^dq z^dz; zero outside the stored box.
    std::int64_t coefficient(int dp, int dq, int dz) const {
        if (!in_box(dp, dq, dz)) return 0;
        return coeffs_[index(dp, dq, dz)];
    }

    // Terms outside the box are dropped.
    void add(int dp, int dq, int dz, std::int64_t c) {
        if (!in_box(dp, dq, dz)) return;
        auto& slot = coeffs_[index(dp, dq, dz)];
        slot = detail::checked_add(slot, c);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = detail::checked_add(coeffs_[i], o.coeffs_[i]);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = detail::checked_add(coeffs_[i], detail::checked_mul(o.coeffs_[i], -1));
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.same_order(b);
        const auto n = static_cast<int>(a.order_);
        TruncatedSeries out(a.order_);
        for (int az = 0; az <= n; ++az)
            for (int aq = 0; aq <= n; ++aq)
                for (int ap = 0; ap <= n; ++ap) {
                    const auto ca = a.coeffs_[a.index(ap, aq, az)];
                    if (ca == 0) continue;
                    for (int bz = 0; az + bz <= n; ++bz)
                        for (int bq = 0; aq + bq <= n; ++bq)
                            for (int bp = 0; ap + bp <= n; ++bp) {
                                const auto cb = b.coeffs_[b.index(bp, bq, bz)];
                                if (cb == 0) continue;
                                auto& slot = out.coeffs_[out.index(ap + bp, aq + bq, az + bz)];
                                slot = detail::checked_add(slot, detail::checked_mul(ca, cb));
                            }
                }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend TruncatedSeries operator*(std::int64_t c, TruncatedSeries s) {
        for (auto& x : s.coeffs_) x = detail::checked_mul(x, c);
        return s;
    }

    bool operator==(const TruncatedSeries&) const = default;

    /// Multiplicative inverse for a series whose constant term is +1 or -1,
    /// via 1/(1 - X) = 1 + X + X^2 + ... with X = 1 - s. X has no constant
    /// term, so X^j vanishes in the box once j exceeds 3 * order.
    TruncatedSeries inverse() const {
        const auto c0 = coefficient(0, 0, 0);
        if (c0 == -1) return -1 * ((-1 * *this).inverse());
        if (c0 != 1) throw std::domain_error("series inverse requires constant term +1 or -1");
        const TruncatedSeries x = constant(order_, 1) - *this;
        TruncatedSeries y = constant(order_, 1);
        for (std::size_t j = 0; j < 3 * order_; ++j) y = constant(order_, 1) + x * y;
        return y;
    }

    double evaluate(double p, double q, double z) const {
        const auto n = static_cast<int>(order_);
        double total = 0.0;
        for (int dz = n; dz >= 0; --dz)
            for (int dq = n; dq >= 0; --dq)
                for (int dp = n; dp >= 0; --dp) {
                    const auto c = coeffs_[index(dp, dq, dz)];
                    if (c != 0) total += static_cast<double>(c) * std::pow(p, dp) * std::pow(q, dq) * std::pow(z, dz);
                }
        return total;
    }

    // Sets p = 1, collapsing into a q,z series of the same order.
    TruncatedSeries at_p_one() const {
        const auto n = static_cast<int>(order_);
        TruncatedSeries out(order_);
        for (int dz = 0; dz <= n; ++dz)
            for (int dq = 0; dq <= n; ++dq)
                for (int dp = 0; dp <= n; ++dp) out.add(0, dq, dz, coefficient(dp, dq, dz));
        return out;
    }

    Polynomial<3> to_polynomial() const {
        Polynomial<3> out;
        const auto n = static_cast<int>(order_);
        for (int dz = 0; dz <= n; ++dz)
            for (int dq = 0; dq <= n; ++dq)
                for (int dp = 0; dp <= n; ++dp) out.add_term({dp, dq, dz}, coefficient(dp, dq, dz));
        return out;
    }

    // Canonical string with variables p, q, z; terms ordered by (z, q, p).
    std::string to_string() const { return format<3>(to_polynomial(), {"p", "q", "z"}, {2, 1, 0}); }

private:
    static std::size_t cube(std::size_t order) { return (order + 1) * (order + 1) * (order + 1); }

    bool in_box(int dp, int dq, int dz) const {
        const auto n = static_cast<int>(order_);
        return dp >= 0 && dq >= 0 && dz >= 0 && dp <= n && dq <= n && dz <= n;
    }

    std::size_t index(int dp, int dq, int dz) const {
        const auto side = order_ + 1;
        return (static_cast<std::size_t>(dz) * side + static_cast<std::size_t>(dq)) * side +
               static_cast<std::size_t>(dp);
    }

    void same_order(const TruncatedSeries& o) const {
        if (o.order_ != order_) throw std::invalid_argument("truncated series of different orders");
    }

    std::size_t order_;
    std::vector<std::int64_t> coeffs_;
};

}  // namespace boundperm
