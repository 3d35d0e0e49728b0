#pragma once

#include <stdexcept>
#include <string>

namespace boundperm {

// Raised for malformed or out-of-domain input: bad permutation words,
// non-subexcedent codes, invalid ballot steps, pattern containment, bad ranges.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw invalid_input(what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

}  // namespace detail
}  // namespace boundperm
