#pragma once

/**
 * @file ballot.hpp
 * @brief Ballot sequences and the bijections between A_{n,k}(213),
 *        S^k_{n+1}(321) and Gamma_{n,k}.
 *
 * Gamma_{n,k} holds the words of n (+1)'s and k (-1)'s whose partial sums
 * never go negative. vpk counts the +1 steps immediately followed by -1,
 * ignoring the rightmost +1.
 *
 *   alpha : A_{n,k}(213)   -> Gamma_{n,k}   des  -> vpk
 *   beta  : S^k_{n+1}(321) -> Gamma_{n,k}   vnw  -> vpk
 *   delta : A_{n,k}(213)   -> S^k_{n+1}(321), equal to beta^-1 o alpha
 *
 * Every sequence decomposes into alternating runs p_1, n_1, ..., p_r, n_r of
 * (+1)'s and (-1)'s with p_j >= 1, n_j >= 1 for j < r and n_r >= 0; then
 * r = vpk + 1. The empty sequence (n = k = 0) has r = 0.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "pattern.hpp"
#include "permutation.hpp"

namespace boundperm {

class BallotSequence {
public:
    BallotSequence() = default;

    // Accepts only +1/-1 steps with nonnegative prefix sums.
    explicit BallotSequence(std::vector<int> steps) : steps_(std::move(steps)) {
        std::int64_t height = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            const int s = steps_[i];
            const auto index = std::to_string(i + 1);
            if (s != 1 && s != -1)
                detail::fail("step " + std::to_string(s) + " at position " + index + " is not +1 or -1");
            height += s;
            if (height < 0) detail::fail("prefix sum goes negative at position " + index);
            (s == 1 ? ups_ : downs_)++;
        }
    }

    std::size_t size() const noexcept { return steps_.size(); }
    std::size_t ups() const noexcept { return ups_; }      // n
    std::size_t downs() const noexcept { return downs_; }  // k
    std::span<const int> steps() const noexcept { return steps_; }

    bool operator==(const BallotSequence&) const = default;
    // +1 sorts before -1.
    auto operator<=>(const BallotSequence& o) const {
        return std::lexicographical_compare_three_way(steps_.begin(), steps_.end(), o.steps_.begin(),
                                                      o.steps_.end(),
                                                      [](int a, int b) { return b <=> a; });
    }

    std::string to_string() const {
        std::string out;
        out.reserve(steps_.size());
        for (int s : steps_) out += s == 1 ? '+' : '-';
        return out;
    }

    struct Runs {
        std::vector<std::size_t> up;    // p_1..p_r
        std::vector<std::size_t> down;  // n_1..n_r
    };

    Runs runs() const {
        Runs r;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (steps_[i] == 1) {
                if (i == 0 || steps_[i - 1] == -1) {
                    r.up.push_back(0);
                    r.down.push_back(0);
                }
                ++r.up.back();
            } else {
                ++r.down.back();
            }
        }
        return r;
    }

private:
    std::vector<int> steps_;
    std::size_t ups_ = 0;
    std::size_t downs_ = 0;
};

inline BallotSequence validate_ballot(std::span<const int> steps) {
    return BallotSequence(std::vector<int>(steps.begin(), steps.end()));
}

/// Parses "+-+" or "1,-1,1" (commas or spaces).
inline BallotSequence parse_ballot(std::string_view text) {
    std::vector<int> steps;
    if (text.find_first_of("0123456789") == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c == '+') steps.push_back(1);
            else if (c == '-') steps.push_back(-1);
            else if (c != ' ')
                detail::fail(std::string("unexpected symbol '") + c + "' at position " +
                             std::to_string(i + 1) + " in ballot sequence");
        }
        return BallotSequence(std::move(steps));
    }
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        if (token == "1" || token == "+1") steps.push_back(1);
        else if (token == "-1") steps.push_back(-1);
        else detail::fail("unexpected token '" + token + "' in ballot sequence");
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else token += c;
    }
    flush();
    return BallotSequence(std::move(steps));
}

/// Visits every member of Gamma_{n,k} in lexicographic order (+1 before -1).
inline void for_each_ballot(std::size_t n, std::size_t k,
                            const std::function<void(const BallotSequence&)>& visit) {
    detail::require(k <= n, "ballot family requires 0 <= k <= n");
    std::vector<int> steps;
    steps.reserve(n + k);
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t up, std::size_t down) {
        if (up == n && down == k) {
            visit(BallotSequence(steps));
            return;
        }
        if (up < n) {
            steps.push_back(1);
            grow(up + 1, down);
            steps.pop_back();
        }
        if (down < k && down < up) {
            steps.push_back(-1);
            grow(up, down + 1);
            steps.pop_back();
        }
    };
    grow(0, 0);
}

inline std::vector<BallotSequence> enumerate_ballot(std::size_t n, std::size_t k) {
    std::vector<BallotSequence> out;
    for_each_ballot(n, k, [&](const BallotSequence& a) { out.push_back(a); });
    return out;
}

inline std::int64_t vpk(const BallotSequence& a) {
    const auto s = a.steps();
    std::optional<std::size_t> last_up;
    for (std::size_t i = s.size(); i-- > 0;)
        if (s[i] == 1) {
            last_up = i;
            break;
        }
    std::int64_t count = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == 1 && s[i + 1] == -1 && i != last_up) ++count;
    return count;
}

namespace detail {

inline const PatternSpec& pattern_213() {
    static const PatternSpec p = PatternSpec::classical(Permutation{2, 1, 3});
    return p;
}

inline const PatternSpec& pattern_321() {
    static const PatternSpec p = PatternSpec::classical(Permutation{3, 2, 1});
    return p;
}

// Positions (1-based, increasing) of the right-to-left maxima; their values decrease.
inline std::vector<std::size_t> rl_maximum_places(const Permutation& p) {
    std::vector<std::size_t> places;
    int best = 0;
    for (std::size_t i = p.size(); i >= 1; --i) {
        if (p(i) > best) {
            places.push_back(i);
            best = p(i);
        }
    }
    std::ranges::reverse(places);
    return places;
}

inline std::size_t check_bounded_213(const Permutation& p, std::optional<std::size_t> k) {
    const auto bound = k.value_or(static_cast<std::size_t>(maxdrop(p)));
    require(bound <= p.size(), "k = " + std::to_string(bound) + " exceeds n = " + std::to_string(p.size()));
    require(avoids(p, pattern_213()), "permutation " + p.to_string() + " contains 213");
    require(static_cast<std::size_t>(maxdrop(p)) <= bound,
            "permutation " + p.to_string() + " has maxdrop " + std::to_string(maxdrop(p)) + " > k = " +
                std::to_string(bound));
    return bound;
}

inline void append(std::vector<int>& out, std::size_t count, int step) { out.insert(out.end(), count, step); }

}  // namespace detail

/// alpha: A_{n,k}(213) -> Gamma_{n,k}. With right-to-left maxima at places
/// i_1 < ... < i_r, writes i_1 up-steps, then for each consecutive pair the
/// value gap in down-steps followed by the place gap in up-steps, and finally
/// (w_n - n + k) down-steps. k defaults to maxdrop(p).
inline BallotSequence alpha(const Permutation& p, std::optional<std::size_t> k = std::nullopt) {
    const auto bound = detail::check_bounded_213(p, k);
    const auto n = p.size();
    std::vector<int> steps;
    if (n == 0) return BallotSequence{};
    const auto places = detail::rl_maximum_places(p);
    detail::append(steps, places.front(), 1);
    for (std::size_t j = 0; j + 1 < places.size(); ++j) {
        detail::append(steps, static_cast<std::size_t>(p(places[j]) - p(places[j + 1])), -1);
        detail::append(steps, places[j + 1] - places[j], 1);
    }
    detail::append(steps, static_cast<std::size_t>(p(n)) + bound - n, -1);
    return BallotSequence(std::move(steps));
}

/// alpha^-1: right-to-left maxima are placed at n - (p_r + ... + p_{j+1}) with
/// values n - k + (n_r + ... + n_j); the gap left of each maximum is filled,
/// right to left, by the largest unused letters below that maximum in increasing order.
inline Permutation alpha_inverse(const BallotSequence& a) {
    const auto n = a.ups();
    const auto k = a.downs();
    if (n == 0) return Permutation{};
    const auto runs = a.runs();
    const auto r = runs.up.size();

    std::vector<std::size_t> place(r), value(r);
    std::size_t up_tail = 0, down_tail = 0;
    for (std::size_t j = r; j-- > 0;) {
        down_tail += runs.down[j];
        place[j] = n - up_tail;
        value[j] = n - k + down_tail;
        up_tail += runs.up[j];
    }

    std::vector<int> w(n, 0);
    std::vector<bool> used(n + 1, false);
    for (std::size_t j = 0; j < r; ++j) {
        w[place[j] - 1] = static_cast<int>(value[j]);
        used[value[j]] = true;
    }
    for (std::size_t j = r; j-- > 0;) {
        const std::size_t gap_begin = j == 0 ? 1 : place[j - 1] + 1;
        std::size_t slot = place[j];
        std::size_t candidate = value[j];
        while (slot-- > gap_begin) {
            do {
                detail::require(candidate > 1, "alpha_inverse: no letter left for position " +
                                                   std::to_string(slot));
                --candidate;
            } while (used[candidate]);
            w[slot - 1] = static_cast<int>(candidate);
            used[candidate] = true;
        }
    }
    return Permutation(std::move(w));
}

/// beta: S^k_{n+1}(321) -> Gamma_{n,k}. With non-weak excedances before the
/// last place at i_1 < ... < i_r (values increasing), writes (i_1 - 1) up-steps
/// and w_{i_1} down-steps, then the place/value gaps, then (n + 1 - i_r)
/// up-steps and (k - w_{i_r}) down-steps. When r = 0 the output is 1^n (-1)^k.
/// k defaults to last letter - 1.
inline BallotSequence beta(const Permutation& p, std::optional<std::size_t> k = std::nullopt) {
    detail::require(!p.empty(), "beta requires a nonempty permutation");
    const auto len = p.size();
    const auto bound = k.value_or(static_cast<std::size_t>(p(len) - 1));
    detail::require(static_cast<std::size_t>(p(len)) == bound + 1,
                    "last letter of " + p.to_string() + " is not k + 1 = " + std::to_string(bound + 1));
    detail::require(avoids(p, detail::pattern_321()), "permutation " + p.to_string() + " contains 321");

    std::vector<int> steps;
    std::size_t prev_place = 1;
    std::size_t prev_value = 0;
    for (std::size_t i = 1; i < len; ++i) {
        if (p(i) >= static_cast<int>(i)) continue;
        const auto v = static_cast<std::size_t>(p(i));
        detail::append(steps, i - prev_place, 1);
        detail::append(steps, v - prev_value, -1);
        prev_place = i;
        prev_value = v;
    }
    detail::append(steps, len - prev_place, 1);
    detail::append(steps, bound - prev_value, -1);
    return BallotSequence(std::move(steps));
}

/// beta^-1: letters k - (n_r + ... + n_{j+1}) go to places p_1 + ... + p_j + 1
/// for j < r, k + 1 goes last, the remaining letters fill the rest increasingly.
inline Permutation beta_inverse(const BallotSequence& a) {
    const auto n = a.ups();
    const auto k = a.downs();
    const auto len = n + 1;
    const auto runs = a.runs();
    const auto r = runs.up.size();

    std::vector<int> w(len, 0);
    std::vector<bool> used(len + 1, false);
    w[len - 1] = static_cast<int>(k + 1);
    used[k + 1] = true;

    std::vector<std::size_t> down_suffix(r + 1, 0);
    for (std::size_t j = r; j-- > 0;) down_suffix[j] = down_suffix[j + 1] + runs.down[j];

    std::size_t up_prefix = 0;
    for (std::size_t j = 0; j + 1 < r; ++j) {
        up_prefix += runs.up[j];
        const auto v = k - down_suffix[j + 1];
        w[up_prefix] = static_cast<int>(v);
        used[v] = true;
    }
    std::size_t next = 1;
    for (auto& slot : w) {
        if (slot != 0) continue;
        while (used[next]) ++next;
        slot = static_cast<int>(next);
        used[next] = true;
    }
    return Permutation(std::move(w));
}

/// delta: A_{n,k}(213) -> S^k_{n+1}(321) built directly. With right-to-left
/// maxima at places i_1 < ... < i_r, the non-weak excedances sit at places
/// i_j + 1 with values n - w_{i_{j+1}} (j < r), k + 1 goes last and the
/// remaining letters fill the rest increasingly.
inline Permutation delta(const Permutation& p, std::optional<std::size_t> k = std::nullopt) {
    const auto bound = detail::check_bounded_213(p, k);
    const auto n = p.size();
    const auto len = n + 1;
    std::vector<int> w(len, 0);
    std::vector<bool> used(len + 1, false);
    w[len - 1] = static_cast<int>(bound + 1);
    used[bound + 1] = true;
    if (n > 0) {
        const auto places = detail::rl_maximum_places(p);
        for (std::size_t j = 0; j + 1 < places.size(); ++j) {
            const auto v = n - static_cast<std::size_t>(p(places[j + 1]));
            w[places[j]] = static_cast<int>(v);
            used[v] = true;
        }
    }
    std::size_t next = 1;
    for (auto& slot : w) {
        if (slot != 0) continue;
        while (used[next]) ++next;
        slot = static_cast<int>(next);
        used[next] = true;
    }
    return Permutation(std::move(w));
}

}  // namespace boundperm
