#pragma once

#include <vector>

#include "padiccf/numbers.hpp"

namespace padiccf {

// Digit conventions for the p-adic floor s(x) = sum_{i=r}^{0} a_i p^i.
// Ruban draws digits from {0, ..., p-1}, Browkin from the symmetric set
// {-(p-1)/2, ..., (p-1)/2}; p is always an odd prime.
enum class Mode { Browkin, Ruban };

inline const char* mode_name(Mode m) { return m == Mode::Browkin ? "browkin" : "ruban"; }

struct PadicContext {
    Int p;
    Mode mode = Mode::Browkin;
    // Digits of sqrt(D) certified modulo p^precision; irrelevant for rational work.
    long precision = 64;

    PadicContext(Int p_, Mode mode_, long precision_ = 64)
        : p(std::move(p_)), mode(mode_), precision(precision_) {
        if (p < 3 || mpz_even_p(p.get_mpz_t()))
            throw ParseError("p must be an odd prime (p >= 3), got " + p.get_str());
        if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
            throw ParseError("p must be an odd prime, got composite " + p.get_str());
        if (precision <= 0) throw ParseError("precision must be positive");
    }

    PadicContext with_precision(long n) const { return PadicContext(p, mode, n); }

    // Representative of residue r (any integer) in the mode's digit set.
    Int digit_of(const Int& r) const {
        Int d = r % p;
        if (d < 0) d += p;
        if (mode == Mode::Browkin && 2 * d > p - 1) d -= p;
        return d;
    }
};

struct PadicDigitExpansion {
    Int p;
    Mode mode;
    long start_exponent = 0;       // r = v_p(x)
    std::vector<Int> digits;       // digit at exponent start_exponent + i

    // sum of digits[i] * p^(start_exponent + i) as an exact rational
    Rat reconstruct() const;
};

// First `count` digits of nonzero x, starting at exponent r = v_p(x).
// The leading digit is nonzero; subtracting the reconstruction from x leaves
// valuation >= r + count.
PadicDigitExpansion padic_digits(const Rat& x, const PadicContext& ctx, std::size_t count);

// s(x) = sum_{i=r}^{0} a_i p^i; empty sum (= 0) when v_p(x) > 0 or x = 0.
// Always satisfies v_p(x - s(x)) > 0.
Rat padic_floor(const Rat& x, const PadicContext& ctx);

}  // namespace padiccf
