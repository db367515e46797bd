#pragma once

#include <string>

#include "json.hpp"
#include "padiccf/numbers.hpp"

namespace padiccf {

// A positive quantity represented by its base-10 logarithm: an exact integer
// part plus a double fraction in [0, 1). Handles bounds like 10^(m * 2^m)
// that overflow any fixed-width exponent. Multiplication adds logs;
// comparison is lexicographic.
class LogNumber {
  public:
    LogNumber() : int_(0), frac_(0.0) {}  // = 1

    static LogNumber from_log10(Int integer_part, double fraction);
    static LogNumber from_integer(const Int& value);        // value >= 1
    static LogNumber from_double(double value);              // value > 0
    static LogNumber from_rational(const Rat& value);        // value > 0

    const Int& log10_int() const { return int_; }
    double log10_frac() const { return frac_; }
    // log10 collapsed to a double; loses the exact integer part's tail.
    double log10_approx() const;

    LogNumber operator*(const LogNumber& o) const;
    LogNumber operator/(const LogNumber& o) const;
    // value^(u/w)
    LogNumber pow(const Rat& exponent) const;
    // log-domain sum: exact when the terms differ by many orders of magnitude
    // (the correction 10^(-gap) underflows), double-accurate otherwise.
    LogNumber operator+(const LogNumber& o) const;

    int compare(const LogNumber& o) const;
    bool operator<(const LogNumber& o) const { return compare(o) < 0; }
    bool operator>(const LogNumber& o) const { return compare(o) > 0; }
    bool operator==(const LogNumber& o) const { return compare(o) == 0; }

    std::string str() const;  // "10^(int + frac)"
    nlohmann::json to_json() const;  // {"log10_int": "...", "log10_frac": f}

  private:
    LogNumber(Int i, double f) : int_(std::move(i)), frac_(f) {}
    void normalize();

    Int int_;
    double frac_;
};

}  // namespace padiccf
