#pragma once

/**
 * @file permutation.hpp
 * @brief The permutation value type and every single-permutation statistic.
 *
 * A permutation of [n] is stored as its one-line word w_1 ... w_n. Positions
 * and values are 1-based throughout, so `p(i)` is the image of i under the
 * function i -> w_i.
 *
 * Statistics provided:
 *   inv, des               classical inversion / descent counts
 *   maxdrop, maxlift       max(i - w_i) and max(w_i - i), clamped at 0
 *   marker_sets            Lmal, Lmap, Rmil, Rmip, Rmal (also on plain words)
 *   cycle_decomposition    cycles, their minima (Cyc) and count (cyc)
 *   sorting_index / dis    Petersen's sor and Wilson's DIS = sor of the inverse
 *   vnw                    non-weak excedances strictly before the last letter
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace boundperm {

class Permutation {
public:
    Permutation() = default;

    // Validates that `word` is a rearrangement of 1..word.size().
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) { validate(); }
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity(std::size_t n) {
        std::vector<int> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
        return Permutation(std::move(w));
    }

    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }

    // Image of position i (1-based).
    int operator()(std::size_t i) const { return word_[i - 1]; }

    std::span<const int> word() const noexcept { return word_; }
    auto begin() const noexcept { return word_.begin(); }
    auto end() const noexcept { return word_.end(); }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    // Canonical text form: space separated values.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(word_[i]);
        }
        return out;
    }

private:
    void validate() const {
        const auto n = word_.size();
        std::vector<bool> seen(n + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            const int v = word_[i];
            const auto index = std::to_string(i + 1);
            if (v < 1 || static_cast<std::size_t>(v) > n) {
                detail::fail("value " + std::to_string(v) + " at index " + index +
                             " is out of range 1.." + std::to_string(n));
            }
            if (seen[v]) detail::fail("duplicate value " + std::to_string(v) + " at index " + index);
            seen[v] = true;
        }
    }

    std::vector<int> word_;
};

inline Permutation build(std::span<const int> word) {
    return Permutation(std::vector<int>(word.begin(), word.end()));
}

inline Permutation inverse(const Permutation& p) {
    std::vector<int> q(p.size());
    for (std::size_t i = 1; i <= p.size(); ++i) q[p(i) - 1] = static_cast<int>(i);
    return Permutation(std::move(q));
}

// (a * b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    detail::require(a.size() == b.size(), "compose: size mismatch");
    std::vector<int> w(a.size());
    for (std::size_t i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
    return Permutation(std::move(w));
}

inline std::int64_t inv_count(const Permutation& p) {
    std::int64_t count = 0;
    const auto w = p.word();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

inline std::int64_t des_count(const Permutation& p) {
    std::int64_t count = 0;
    const auto w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++count;
    return count;
}

inline std::int64_t maxdrop(const Permutation& p) {
    std::int64_t best = 0;
    for (std::size_t i = 1; i <= p.size(); ++i)
        best = std::max<std::int64_t>(best, static_cast<std::int64_t>(i) - p(i));
    return best;
}

inline std::int64_t maxlift(const Permutation& p) {
    std::int64_t best = 0;
    for (std::size_t i = 1; i <= p.size(); ++i)
        best = std::max<std::int64_t>(best, p(i) - static_cast<std::int64_t>(i));
    return best;
}

/// Left-to-right maxima and right-to-left minima/maxima of a word. Sets are
/// sorted ascending. Works on arbitrary integer words (codes included); the
/// comparisons are strict, so repeated letters never qualify against each other.
struct MarkerSets {
    std::vector<int> lmal;  // left-to-right maximum letters
    std::vector<int> lmap;  // left-to-right maximum places
    std::vector<int> rmil;  // right-to-left minimum letters
    std::vector<int> rmip;  // right-to-left minimum places
    std::vector<int> rmal;  // right-to-left maximum letters

    std::size_t lmax() const noexcept { return lmal.size(); }
    std::size_t rmin() const noexcept { return rmil.size(); }
    std::size_t rmax() const noexcept { return rmal.size(); }
};

inline MarkerSets marker_sets(std::span<const int> w) {
    MarkerSets m;
    const auto n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m.lmap.empty() || w[i] > w[m.lmap.back() - 1]) {
            m.lmap.push_back(static_cast<int>(i + 1));
            m.lmal.push_back(w[i]);
        }
    }
    std::vector<int> min_places, max_letters;
    int running_min = 0, running_max = 0;
    for (std::size_t r = n; r-- > 0;) {
        if (r == n - 1 || w[r] < running_min) {
            min_places.push_back(static_cast<int>(r + 1));
            m.rmil.push_back(w[r]);
            running_min = w[r];
        }
        if (r == n - 1 || w[r] > running_max) {
            max_letters.push_back(w[r]);
            running_max = w[r];
        }
    }
    std::ranges::sort(m.lmal);
    std::ranges::sort(m.rmil);
    std::ranges::sort(min_places);
    std::ranges::sort(max_letters);
    m.rmip = std::move(min_places);
    m.rmal = std::move(max_letters);
    return m;
}

inline MarkerSets marker_sets(const Permutation& p) { return marker_sets(p.word()); }

struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;  // each starts at its minimum; sorted by minima
    std::vector<int> minima;               // Cyc

    std::size_t count() const noexcept { return cycles.size(); }
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
    CycleDecomposition out;
    std::vector<bool> seen(p.size() + 1, false);
    for (std::size_t start = 1; start <= p.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (auto x = static_cast<int>(start); !seen[x]; x = p(x)) {
            seen[x] = true;
            cycle.push_back(x);
        }
        out.minima.push_back(static_cast<int>(start));
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

inline std::size_t cyc_count(const Permutation& p) { return cycle_decomposition(p).count(); }

/// The unique factorisation p = (i_1 j_1)(i_2 j_2)...(i_r j_r) with i_s < j_s and
/// j_1 < j_2 < ... < j_r. Replaying the swaps of positions (i_s, j_s) in order,
/// starting from the identity word, reproduces the word of p.
inline std::vector<std::pair<int, int>> sorting_transpositions(const Permutation& p) {
    std::vector<int> w(p.begin(), p.end());
    std::vector<int> where(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) where[w[i]] = static_cast<int>(i + 1);

    std::vector<std::pair<int, int>> swaps;
    for (auto j = static_cast<int>(w.size()); j >= 2; --j) {
        const int i = where[j];
        if (i == j) continue;
        const int displaced = w[j - 1];
        std::swap(w[i - 1], w[j - 1]);
        where[displaced] = i;
        where[j] = j;
        swaps.emplace_back(i, j);
    }
    std::ranges::reverse(swaps);
    return swaps;
}

inline std::int64_t sorting_index(const Permutation& p) {
    std::int64_t total = 0;
    for (const auto& [i, j] : sorting_transpositions(p)) total += j - i;
    return total;
}

inline std::int64_t dis(const Permutation& p) { return sorting_index(inverse(p)); }

inline std::int64_t vnw(const Permutation& p) {
    detail::require(!p.empty(), "vnw is undefined on the empty permutation");
    std::int64_t count = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p(i) < static_cast<int>(i)) ++count;
    return count;
}

}  // namespace boundperm
