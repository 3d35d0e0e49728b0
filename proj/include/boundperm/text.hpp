#pragma once

// Text input forms shared by the command-line tool and the tests.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "codes.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace boundperm {

/// Splits on spaces, tabs and commas; each token must be a nonnegative integer.
inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        for (char c : token)
            if (!std::isdigit(static_cast<unsigned char>(c))) detail::fail("non-numeric token '" + token + "'");
        detail::require(token.size() <= 9, "token '" + token + "' is too large");
        out.push_back(std::stoi(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r') flush();
        else token += c;
    }
    flush();
    return out;
}

// A single separator-free token is read digit by digit ("571492638"), which
// only makes sense for words over 1..9.
inline std::vector<int> parse_word(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    const auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto body = text.substr(first, last - first + 1);
    if (body.size() > 1 && body.find_first_of(" ,\t") == std::string_view::npos) {
        std::vector<int> digits;
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                detail::fail("non-numeric token '" + std::string(body) + "'");
            digits.push_back(c - '0');
        }
        return digits;
    }
    return parse_int_list(body);
}

inline Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

inline SubexcedentSequence parse_code(std::string_view text) { return SubexcedentSequence(parse_word(text)); }

}  // namespace boundperm
