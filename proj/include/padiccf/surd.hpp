#pragma once

#include <string>

#include "padiccf/hensel.hpp"
#include "padiccf/numbers.hpp"
#include "padiccf/padic.hpp"

namespace padiccf {

// Exact element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), with a
// chosen Hensel branch fixing the embedding of sqrt(D) into Q_p. All field
// arithmetic is exact; finite-precision sqrt(D) residues are consumed only by
// the digit/valuation routines that need them.
class SurdElement {
  public:
    SurdElement(Rat a, Rat b, Int D, HenselBranch branch = HenselBranch::PlusRoot);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& D() const { return d_; }
    HenselBranch branch() const { return branch_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    SurdElement conjugate() const { return SurdElement(a_, -b_, d_, branch_); }
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }   // z * conj(z)
    Rat trace() const { return 2 * a_; }

    SurdElement operator-() const { return SurdElement(-a_, -b_, d_, branch_); }
    SurdElement operator+(const SurdElement& o) const;
    SurdElement operator-(const SurdElement& o) const;
    SurdElement operator*(const SurdElement& o) const;
    SurdElement operator/(const SurdElement& o) const;
    SurdElement inverse() const;

    SurdElement operator+(const Rat& r) const { return SurdElement(a_ + r, b_, d_, branch_); }
    SurdElement operator-(const Rat& r) const { return SurdElement(a_ - r, b_, d_, branch_); }
    SurdElement operator*(const Rat& r) const { return SurdElement(a_ * r, b_ * r, d_, branch_); }

    bool operator==(const SurdElement& o) const;
    // Ordering key for exact memoization (lexicographic on (a, b)).
    bool key_less(const SurdElement& o) const;

    std::string str() const;

  private:
    // Wildcard-D combination: a rational element (b = 0) adopts the other
    // operand's field.
    static void merge_fields(const SurdElement& x, const SurdElement& y, Int& d, HenselBranch& br);

    Rat a_, b_;
    Int d_;
    HenselBranch branch_;
};

inline SurdElement operator+(const Rat& r, const SurdElement& z) { return z + r; }
inline SurdElement operator-(const Rat& r, const SurdElement& z) { return -z + r; }
inline SurdElement operator*(const Rat& r, const SurdElement& z) { return z * r; }

// Throws NotASquare unless sqrt(D) exists in Q_p (v_p(D) even, unit part a
// quadratic residue mod p).
void require_embeddable(const Int& D, const PadicContext& ctx);

// v_p of sqrt(D) in Q_p (= v_p(D)/2).
long sqrt_valuation(const Int& D, const Int& p);

// Rational proxy a + b*x with x = sqrt(D) mod p^N for the element's branch;
// agrees with the element up to valuation v_p(b) + N.
Rat embedding_proxy(const SurdElement& z, const PadicContext& ctx, long N);

// Exact v_p(a + b*sqrt(D)) for the embedded element; Infinity for 0.
// Throws PrecisionExhausted when ctx.precision cannot separate the element
// from its conjugate.
Valuation surd_valuation(const SurdElement& z, const PadicContext& ctx);

// Same, but retries once at the exact budget the separation needs (the
// norm pins it down), so it never fails on precision.
Valuation surd_valuation_exact(const SurdElement& z, const PadicContext& ctx);

// s(z): same contract as the rational overload.
Rat padic_floor(const SurdElement& z, const PadicContext& ctx);

}  // namespace padiccf
