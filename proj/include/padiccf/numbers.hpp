#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

#include "padiccf/errors.hpp"

namespace padiccf {

// Exact scalars. mpq_class keeps the canonical form invariants
// (gcd(num, den) = 1, den > 0, zero as 0/1) once canonicalized.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced rational from a numerator/denominator pair.
inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw ZeroInput("make_rational: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for integer e of either sign; base != 0 when e < 0.
inline Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw ZeroInput("pow_rat: 0 to a negative power");
    Rat inv = 1 / base;
    return pow_rat(inv, -e);
}

// p^e as an exact rational (e may be negative).
inline Rat p_power(const Int& p, long e) { return pow_rat(Rat(p), e); }

inline bool is_perfect_square(const Int& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

// p-adic valuation of a nonzero integer.
inline long vp_int(const Int& x, const Int& p) {
    if (x == 0) throw ZeroInput("vp_int: valuation of 0 requested");
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// Integer valuation with the distinguished Infinity marker for 0.
class Valuation {
  public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation of(long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::logic_error("Valuation: finite value of Infinity requested");
        return v_;
    }

    // Infinity compares greater than every finite valuation.
    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }
    friend bool operator==(const Valuation& a, long b) { return !a.infinite_ && a.v_ == b; }
    friend std::strong_ordering operator<=>(const Valuation& a, long b) {
        if (a.infinite_) return std::strong_ordering::greater;
        return a.v_ <=> b;
    }

    Valuation operator+(const Valuation& o) const {
        if (infinite_ || o.infinite_) return infinity();
        return of(v_ + o.v_);
    }
    Valuation operator-() const {
        if (infinite_) throw std::logic_error("Valuation: negation of Infinity");
        return of(-v_);
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

  private:
    Valuation(bool inf, long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    long v_;
};

// v_p(x) = v_p(num) - v_p(den); Infinity for x = 0.
inline Valuation vp(const Rat& x, const Int& p) {
    if (x == 0) return Valuation::infinity();
    long vn = (num(x) == 0) ? 0 : vp_int(num(x), p);
    long vd = (den(x) == 1) ? 0 : vp_int(den(x), p);
    return Valuation::of(vn - vd);
}

}  // namespace padiccf
