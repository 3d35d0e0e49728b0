#pragma once

/**
 * @file enumerate.hpp
 * @brief Deterministic generators for the permutation families.
 *
 *   all      S_n
 *   A        A(n,k) = { maxdrop <= k }
 *   S        S(n,k) = { max(w_i - i) <= k } = inverses of A(n,k)
 *   s321     S^k_{n+1}(321): 321-avoiding words of length n + 1 ending in k + 1
 *   ballot   Gamma_{n,k} (sequences, see ballot.hpp)
 *
 * Every permutation family is produced in lexicographic order of the one-line
 * word, optionally filtered by a pattern to avoid. S(n,k) is grown by
 * inserting m into the last min(k+1, m) slots of each member of S(m-1,k);
 * A(n,k) is the set of inverses. Both are sorted afterwards.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ballot.hpp"
#include "error.hpp"
#include "pattern.hpp"
#include "permutation.hpp"

namespace boundperm {

enum class Family { all, bounded_drop, bounded_lift, ballot, ending_in };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::all: return "all";
        case Family::bounded_drop: return "A";
        case Family::bounded_lift: return "S";
        case Family::ballot: return "ballot";
        case Family::ending_in: return "s321";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    for (auto f : {Family::all, Family::bounded_drop, Family::bounded_lift, Family::ballot, Family::ending_in})
        if (family_name(f) == name) return f;
    detail::fail("unknown family '" + std::string(name) + "' (expected all, A, S, s321 or ballot)");
}

struct SetSpec {
    Family family = Family::all;
    std::size_t n = 0;
    std::size_t k = 0;  // ignored for Family::all
    std::optional<PatternSpec> avoid;

    // Length of the permutations in the family (n + 1 for s321).
    std::size_t length() const { return family == Family::ending_in ? n + 1 : n; }

    void validate() const {
        if (family != Family::all) {
            detail::require(k <= n, "family " + std::string(family_name(family)) + " requires 0 <= k <= n, got n = " +
                                        std::to_string(n) + ", k = " + std::to_string(k));
        }
        if (avoid) detail::require(family != Family::ballot, "pattern avoidance does not apply to ballot sequences");
    }
};

namespace detail {

inline std::vector<std::vector<int>> grow_bounded_lift(std::size_t n, std::size_t k) {
    std::vector<std::vector<int>> level{{}};
    for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t first_slot = m > k ? m - k : 1;  // 1-based insertion place of m
        std::vector<std::vector<int>> next;
        next.reserve(level.size() * std::min(k + 1, m));
        for (const auto& w : level) {
            for (std::size_t slot = first_slot; slot <= m; ++slot) {
                std::vector<int> grown;
                grown.reserve(m);
                grown.insert(grown.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(slot - 1));
                grown.push_back(static_cast<int>(m));
                grown.insert(grown.end(), w.begin() + static_cast<std::ptrdiff_t>(slot - 1), w.end());
                next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return level;
}

inline bool admitted(const Permutation& p, const SetSpec& spec) {
    if (spec.family == Family::ending_in && !avoids(p, pattern_321())) return false;
    return !spec.avoid || avoids(p, *spec.avoid);
}

}  // namespace detail

/// Members of a permutation family in lexicographic order.
inline std::vector<Permutation> enumerate(const SetSpec& spec) {
    spec.validate();
    detail::require(spec.family != Family::ballot, "ballot family yields sequences; use enumerate_ballot");
    std::vector<Permutation> out;

    switch (spec.family) {
        case Family::all: {
            std::vector<int> w(spec.n);
            std::iota(w.begin(), w.end(), 1);
            do {
                Permutation p(w);
                if (detail::admitted(p, spec)) out.push_back(std::move(p));
            } while (std::next_permutation(w.begin(), w.end()));
            break;
        }
        case Family::bounded_lift:
        case Family::bounded_drop: {
            for (auto& w : detail::grow_bounded_lift(spec.n, spec.k)) {
                Permutation p(std::move(w));
                if (spec.family == Family::bounded_drop) p = inverse(p);
                if (detail::admitted(p, spec)) out.push_back(std::move(p));
            }
            std::ranges::sort(out);
            break;
        }
        case Family::ending_in: {
            const auto len = spec.n + 1;
            const int last = static_cast<int>(spec.k + 1);
            std::vector<int> head;
            for (int v = 1; v <= static_cast<int>(len); ++v)
                if (v != last) head.push_back(v);
            do {
                std::vector<int> w(head);
                w.push_back(last);
                Permutation p(std::move(w));
                if (detail::admitted(p, spec)) out.push_back(std::move(p));
            } while (std::next_permutation(head.begin(), head.end()));
            break;
        }
        case Family::ballot: break;
    }
    return out;
}

inline std::uint64_t count(const SetSpec& spec) {
    if (spec.family == Family::ballot) {
        spec.validate();
        std::uint64_t total = 0;
        for_each_ballot(spec.n, spec.k, [&](const BallotSequence&) { ++total; });
        return total;
    }
    return enumerate(spec).size();
}

}  // namespace boundperm
