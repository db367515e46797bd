#pragma once

#include "padiccf/numbers.hpp"

namespace padiccf {

// The two square roots of D in Q_p. PlusRoot is the branch whose unit part
// reduces mod p to the smaller of the two least-nonnegative root residues;
// MinusRoot is its exact negative.
enum class HenselBranch { PlusRoot, MinusRoot };

inline const char* branch_name(HenselBranch b) { return b == HenselBranch::PlusRoot ? "+" : "-"; }

// Square root of a quadratic residue a modulo an odd prime p (Tonelli-Shanks).
// Returns the least nonnegative root; throws NotASquare otherwise.
Int sqrt_mod_p(const Int& a, const Int& p);

// x with x^2 = D (mod p^N) for odd p, v_p(D) even, unit part a residue mod p.
// Requires D != 0; the result is returned reduced modulo p^N.
Int hensel_sqrt(const Int& D, const Int& p, long N, HenselBranch branch = HenselBranch::PlusRoot);

}  // namespace padiccf
