#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact sparse multivariate polynomials over the 64-bit integers.
 *
 * Coefficients are checked on every add and multiply; an overflow throws
 * std::overflow_error instead of wrapping. Zero coefficients are never stored.
 *
 * BivariatePolynomial is Polynomial<2> in the variables (q, t): exponent
 * index 0 is q, index 1 is t.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boundperm {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

}  // namespace detail

template <std::size_t Vars>
class Polynomial {
public:
    using Exponents = std::array<int, Vars>;
    using Terms = std::map<Exponents, std::int64_t>;

    Polynomial() = default;
    Polynomial(std::int64_t constant) { add_term(Exponents{}, constant); }  // NOLINT(google-explicit-constructor)

    static Polynomial monomial(Exponents e, std::int64_t c = 1) {
        Polynomial p;
        p.add_term(e, c);
        return p;
    }

    static Polynomial variable(std::size_t index, int power = 1) {
        Exponents e{};
        e[index] = power;
        return monomial(e);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::int64_t coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Exponents& e, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t v = 0; v < Vars; ++v) e[v] = ea[v] + eb[v];
                out.add_term(e, detail::checked_mul(ca, cb));
            }
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Substitutes a value for one variable, leaving its exponent at 0.
    Polynomial substitute(std::size_t index, std::int64_t value) const {
        Polynomial out;
        for (const auto& [e, c] : terms_) {
            std::int64_t scaled = c;
            for (int i = 0; i < e[index]; ++i) scaled = detail::checked_mul(scaled, value);
            Exponents f = e;
            f[index] = 0;
            out.add_term(f, scaled);
        }
        return out;
    }

    std::int64_t evaluate(const std::array<std::int64_t, Vars>& at) const {
        std::int64_t total = 0;
        for (const auto& [e, c] : terms_) {
            std::int64_t term = c;
            for (std::size_t v = 0; v < Vars; ++v)
                for (int i = 0; i < e[v]; ++i) term = detail::checked_mul(term, at[v]);
            total = detail::checked_add(total, term);
        }
        return total;
    }

private:
    Terms terms_;
};

template <std::size_t Vars>
Polynomial<Vars> pow(Polynomial<Vars> base, unsigned exponent) {
    Polynomial<Vars> result(1);
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

/// Canonical text: terms ordered by total degree descending, ties broken
/// lexicographically (descending) on the exponents listed in `priority`.
/// Each term renders as `c*x^a*y^b` with variables in `names` order; unit
/// coefficients (a lone sign for -1) and unit exponents are elided; terms
/// join with " + ".
template <std::size_t Vars>
std::string format(const Polynomial<Vars>& p, const std::array<std::string_view, Vars>& names,
                   const std::array<std::size_t, Vars>& priority) {
    if (p.is_zero()) return "0";
    using Entry = std::pair<typename Polynomial<Vars>::Exponents, std::int64_t>;
    std::vector<Entry> entries(p.terms().begin(), p.terms().end());
    auto key = [&](const typename Polynomial<Vars>::Exponents& e) {
        std::array<int, Vars + 1> k{};
        for (std::size_t v = 0; v < Vars; ++v) {
            k[0] += e[v];
            k[v + 1] = e[priority[v]];
        }
        return k;
    };
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const Entry& a, const Entry& b) { return key(a.first) > key(b.first); });

    std::string out;
    for (std::size_t t = 0; t < entries.size(); ++t) {
        const auto& [e, c] = entries[t];
        if (t) out += " + ";
        std::vector<std::string> factors;
        bool constant = true;
        for (std::size_t v = 0; v < Vars; ++v) constant = constant && e[v] == 0;
        if (constant || (c != 1 && c != -1)) factors.push_back(std::to_string(c));
        else if (c == -1) out += '-';
        for (std::size_t v = 0; v < Vars; ++v) {
            if (e[v] == 0) continue;
            std::string f(names[v]);
            if (e[v] != 1) f += "^" + std::to_string(e[v]);
            factors.push_back(std::move(f));
        }
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f) out += '*';
            out += factors[f];
        }
    }
    return out;
}

using BivariatePolynomial = Polynomial<2>;

namespace var {
inline constexpr std::size_t q = 0;
inline constexpr std::size_t t = 1;
}  // namespace var

inline std::string to_string(const BivariatePolynomial& p) { return format<2>(p, {"q", "t"}, {var::t, var::q}); }

}  // namespace boundperm
