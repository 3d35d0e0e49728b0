#pragma once

// Classical and vincular pattern occurrence counting.
//
// A pattern is a permutation word of length m together with a set of
// adjacency indices: index i in the set means letters i and i+1 of the
// pattern are underlined, so their images must sit in adjacent positions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace boundperm {

class PatternSpec {
public:
    PatternSpec() = default;

    PatternSpec(Permutation letters, std::vector<int> adjacency)
        : letters_(std::move(letters)), adjacency_(std::move(adjacency)) {
        std::ranges::sort(adjacency_);
        adjacency_.erase(std::unique(adjacency_.begin(), adjacency_.end()), adjacency_.end());
        const auto m = static_cast<int>(letters_.size());
        for (int i : adjacency_) {
            detail::require(i >= 1 && i <= m - 1, "adjacency index " + std::to_string(i) +
                                                      " outside 1.." + std::to_string(m - 1));
        }
    }

    static PatternSpec classical(Permutation letters) { return PatternSpec(std::move(letters), {}); }

    const Permutation& letters() const noexcept { return letters_; }
    const std::vector<int>& adjacency() const noexcept { return adjacency_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool is_classical() const noexcept { return adjacency_.empty(); }

    bool must_follow(std::size_t letter) const {  // letter (1-based) glued to its predecessor
        return std::ranges::binary_search(adjacency_, static_cast<int>(letter) - 1);
    }

    bool operator==(const PatternSpec&) const = default;

    // "3142" with adjacency {1} renders as "_31_42".
    std::string to_string() const {
        std::string out;
        bool open = false;
        for (std::size_t i = 1; i <= size(); ++i) {
            const bool glued_next = i < size() && must_follow(i + 1);
            if (glued_next && !open) {
                out += '_';
                open = true;
            }
            if (i > 1 && size() > 9) out += ',';
            out += std::to_string(letters_(i));
            if (open && !glued_next) {
                out += '_';
                open = false;
            }
        }
        return out;
    }

private:
    Permutation letters_;
    std::vector<int> adjacency_;
};

namespace detail {

class OccurrenceSearch {
public:
    OccurrenceSearch(const Permutation& host, const PatternSpec& pattern, bool stop_at_first)
        : host_(host.word()), pat_(pattern.letters().word()), spec_(pattern), stop_(stop_at_first),
          chosen_(pattern.size()) {}

    std::int64_t run() {
        if (pat_.empty()) return 1;
        place(0, 0);
        return found_;
    }

private:
    void place(std::size_t depth, std::size_t from) {
        const auto m = pat_.size();
        std::size_t lo = from, hi = host_.size();
        if (depth > 0 && spec_.must_follow(depth + 1)) {
            lo = from;
            hi = std::min(from + 1, host_.size());
        }
        // leave room for the remaining letters
        if (host_.size() < m - depth) return;
        hi = std::min(hi, host_.size() - (m - depth - 1));
        for (std::size_t pos = lo; pos < hi; ++pos) {
            if (!consistent(depth, pos)) continue;
            chosen_[depth] = pos;
            if (depth + 1 == m) {
                ++found_;
            } else {
                place(depth + 1, pos + 1);
            }
            if (stop_ && found_ > 0) return;
        }
    }

    bool consistent(std::size_t depth, std::size_t pos) const {
        const int v = host_[pos];
        for (std::size_t l = 0; l < depth; ++l) {
            const bool host_less = host_[chosen_[l]] < v;
            const bool pat_less = pat_[l] < pat_[depth];
            if (host_less != pat_less) return false;
        }
        return true;
    }

    std::span<const int> host_;
    std::span<const int> pat_;
    const PatternSpec& spec_;
    bool stop_;
    std::vector<std::size_t> chosen_;
    std::int64_t found_ = 0;
};

}  // namespace detail

inline std::int64_t occurrence_count(const Permutation& p, const PatternSpec& pattern) {
    return detail::OccurrenceSearch(p, pattern, false).run();
}

inline bool contains(const Permutation& p, const PatternSpec& pattern) {
    return detail::OccurrenceSearch(p, pattern, true).run() > 0;
}

inline bool avoids(const Permutation& p, const PatternSpec& pattern) { return !contains(p, pattern); }

/// Parses "213", "2,1,3", "2_13_" or "_13_2". Underscores bracket an
/// adjacent block; explicit adjacency indices may be added by the caller.
inline PatternSpec parse_pattern(std::string_view text, std::vector<int> extra_adjacency = {}) {
    std::vector<int> letters;
    std::vector<int> adjacency = std::move(extra_adjacency);
    const bool separated = text.find_first_of(", ") != std::string_view::npos;
    bool open = false;
    std::size_t block_start = 0;
    std::string number;
    auto flush = [&] {
        if (number.empty()) return;
        letters.push_back(std::stoi(number));
        number.clear();
    };
    for (char c : text) {
        if (c == '_') {
            flush();
            if (!open) {
                block_start = letters.size() + 1;
            } else {
                for (std::size_t i = block_start; i < letters.size(); ++i)
                    adjacency.push_back(static_cast<int>(i));
            }
            open = !open;
        } else if (c >= '0' && c <= '9') {
            number += c;
            if (!separated) flush();
        } else if (c == ',' || c == ' ') {
            flush();
        } else {
            detail::fail(std::string("unexpected character '") + c + "' in pattern");
        }
    }
    flush();
    detail::require(!open, "unterminated '_' block in pattern");
    detail::require(!letters.empty(), "empty pattern");
    return PatternSpec(Permutation(std::move(letters)), std::move(adjacency));
}

}  // namespace boundperm
