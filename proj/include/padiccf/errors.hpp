#pragma once

#include <stdexcept>
#include <string>

namespace padiccf {

// Nonzero input required (digit extraction, valuation of 0 where forbidden).
struct ZeroInput : std::domain_error {
    explicit ZeroInput(const std::string& what) : std::domain_error(what) {}
};

// D has no square root in Q_p for this prime.
struct NotASquare : std::domain_error {
    explicit NotASquare(const std::string& what) : std::domain_error(what) {}
};

// The certified sqrt(D) residue budget N cannot settle the requested digits.
// Recoverable: callers may retry with a larger budget.
struct PrecisionExhausted : std::runtime_error {
    PrecisionExhausted(const std::string& what, long needed_, long available_)
        : std::runtime_error(what), needed(needed_), available(available_) {}
    long needed;     // exponent budget that would have sufficed
    long available;  // budget that was configured
};

struct EpsilonOutOfRange : std::domain_error {
    explicit EpsilonOutOfRange(const std::string& what) : std::domain_error(what) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero(const std::string& what, std::size_t depth_)
        : std::domain_error(what), depth(depth_) {}
    std::size_t depth;  // fold depth at which the zero denominator appeared
};

struct NotPalindromic : std::domain_error {
    explicit NotPalindromic(const std::string& what) : std::domain_error(what) {}
};

struct NonzeroB0 : std::domain_error {
    explicit NonzeroB0(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct UnsortedInput : std::invalid_argument {
    explicit UnsortedInput(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace padiccf
