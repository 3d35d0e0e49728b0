#pragma once

/**
 * @file codes.hpp
 * @brief Subexcedent encodings of permutations and the map gamma.
 *
 * All three codes send S_n bijectively onto SE_n = { (a_1..a_n) : 1 <= a_i <= i }:
 *
 *   Lehmer code   a_i = #{ j <= i : w_j <= w_i }
 *   A-code        Lehmer code of the inverse
 *   B-code        b_i = first value <= i on the backward orbit i, p^-1(i), p^-2(i), ...
 *
 * gamma = (B-code)^-1 o A-code transports (inv, Rmil, Lmap) to (sor, Cyc, Lmap)
 * and preserves max(w_i - i), so it restricts to a bijection of each S(n,k).
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace boundperm {

class SubexcedentSequence {
public:
    SubexcedentSequence() = default;

    explicit SubexcedentSequence(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const int a = entries_[i];
            if (a < 1 || static_cast<std::size_t>(a) > i + 1) {
                detail::fail("entry " + std::to_string(a) + " at index " + std::to_string(i + 1) +
                             " violates 1 <= a_i <= i");
            }
        }
    }
    SubexcedentSequence(std::initializer_list<int> entries)
        : SubexcedentSequence(std::vector<int>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    int operator()(std::size_t i) const { return entries_[i - 1]; }
    std::span<const int> entries() const noexcept { return entries_; }

    bool operator==(const SubexcedentSequence&) const = default;
    auto operator<=>(const SubexcedentSequence&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

private:
    std::vector<int> entries_;
};

inline SubexcedentSequence lehmer_code(const Permutation& p) {
    const auto w = p.word();
    std::vector<int> a(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int rank = 0;
        for (std::size_t j = 0; j <= i; ++j)
            if (w[j] <= w[i]) ++rank;
        a[i] = rank;
    }
    return SubexcedentSequence(std::move(a));
}

// a_i is the rank of w_i among w_1..w_i, so reading right to left each entry
// picks the a_i-th smallest value still unused.
inline Permutation lehmer_decode(const SubexcedentSequence& code) {
    const auto n = code.size();
    std::vector<int> pool(n);
    for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<int>(v + 1);
    std::vector<int> w(n);
    for (std::size_t i = n; i >= 1; --i) {
        const auto rank = static_cast<std::size_t>(code(i));
        w[i - 1] = pool[rank - 1];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(rank - 1));
    }
    return Permutation(std::move(w));
}

inline SubexcedentSequence a_code(const Permutation& p) { return lehmer_code(inverse(p)); }

inline Permutation a_decode(const SubexcedentSequence& code) { return inverse(lehmer_decode(code)); }

inline SubexcedentSequence b_code(const Permutation& p) {
    const auto back = inverse(p);
    std::vector<int> b(p.size());
    for (std::size_t i = 1; i <= p.size(); ++i) {
        int x = back(i);
        while (x > static_cast<int>(i)) x = back(x);
        b[i - 1] = x;
    }
    return SubexcedentSequence(std::move(b));
}

/// Inverse of b_code, built by inserting the letters 1..n in turn.
///
/// b_m is always the position of m (its first backward step already lands at
/// or below m), and removing m from its cycle leaves b_1..b_{m-1} unchanged,
/// since backward orbits of smaller letters only skip over m. So given the
/// permutation p' of [m-1] decoded from the prefix, extend it with the fixed
/// point m and splice m in front of b_m: p(b_m) = m, p(m) = p'(b_m).
inline Permutation b_decode(const SubexcedentSequence& code) {
    const auto n = code.size();
    std::vector<int> w;
    w.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        const auto at = static_cast<std::size_t>(code(m));
        w.push_back(static_cast<int>(m));
        std::swap(w[at - 1], w[m - 1]);
    }
    return Permutation(std::move(w));
}

inline Permutation gamma(const Permutation& p) { return b_decode(a_code(p)); }

inline Permutation gamma_inverse(const Permutation& p) { return a_decode(b_code(p)); }

}  // namespace boundperm
