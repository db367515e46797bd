#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "padiccf/surd.hpp"

namespace padiccf {

// Exact field element: rational or quadratic surd.
using FieldValue = std::variant<Rat, SurdElement>;

inline SurdElement as_surd(const Rat& r) { return SurdElement(r, Rat(0), Int(2)); }
inline SurdElement as_surd(const FieldValue& v) {
    return std::holds_alternative<Rat>(v) ? as_surd(std::get<Rat>(v)) : std::get<SurdElement>(v);
}
std::string field_value_str(const FieldValue& v);

enum class TerminationKind { Finite, Periodic, Truncated, PrecisionExhausted };

struct Termination {
    TerminationKind kind = TerminationKind::Finite;
    std::size_t preperiod = 0;  // Periodic: index of the first repeated complete quotient
    std::size_t period = 0;     // Periodic: distance to its recurrence
    std::size_t index = 0;      // PrecisionExhausted: failing step; Truncated: term cap
};

const char* termination_name(TerminationKind k);

// Partial quotients b_i = s(alpha_i) with the complete-quotient trail.
// Every quotient b_i with i >= 1 satisfies v_p(b_i) < 0.
struct CFExpansion {
    PadicContext context;
    std::vector<Rat> quotients;        // b_0, b_1, ...
    Termination termination;
    std::vector<FieldValue> complete;  // alpha_0, alpha_1, ... (one per quotient)
};

// Runs b_i = s(alpha_i), alpha_{i+1} = 1/(alpha_i - b_i) until the remainder
// vanishes (Finite), an exact complete quotient repeats (Periodic), max_terms
// quotients are emitted (Truncated), or sqrt(D) precision runs out
// (PrecisionExhausted, after one automatic retry at doubled precision).
CFExpansion expand(const Rat& x, const PadicContext& ctx, std::size_t max_terms = 200);
CFExpansion expand(const SurdElement& x, const PadicContext& ctx, std::size_t max_terms = 200);

// First `count` quotients, continuing a Periodic expansion by cycling its
// period. Finite/Truncated expansions return at most what they hold.
std::vector<Rat> unroll(const CFExpansion& cf, std::size_t count);

// Exact value of a finite quotient sequence, folded from the right.
Rat evaluate(const std::vector<Rat>& quotients);

struct ConvergentPair {
    std::size_t index = 0;
    Rat A, B;
    Valuation vpA = Valuation::infinity();
    Valuation vpB = Valuation::infinity();
    Rat archA, archB;                       // |A|_inf, |B|_inf
    bool arch_B_le_padic = true;            // |B|_inf <= |B|_p
    std::optional<bool> arch_A_le_padic;    // |A|_inf <= |A|_p, when |b_0|_p != 1
};

// Convergents A_i/B_i of a raw quotient sequence (b_0, b_1, ...), seeds
// A_{-2}=0, A_{-1}=1, B_{-2}=1, B_{-1}=0. Enforces v_p(b_i) < 0 for i >= 1 and
// asserts the determinant identity A_i B_{i-1} - B_i A_{i-1} = (-1)^{i+1} and
// the valuation sums for v_p(B_i) (and v_p(A_i) when they apply); the
// Archimedean-vs-p-adic comparisons are recorded per pair.
std::vector<ConvergentPair> convergents_of(const std::vector<Rat>& quotients, const Int& p);

// Convergents of an expansion; additionally asserts |B_i|_inf <= |B_i|_p
// (always true for floor-generated quotients).
std::vector<ConvergentPair> convergents(const CFExpansion& cf);

// Exact v_p(x - A_i/B_i). Satisfies v_p(x - A_i/B_i) > -2 vpB_i at every index
// of the expansion of x.
Valuation approx_defect(const Rat& x, const ConvergentPair& c, const PadicContext& ctx);
Valuation approx_defect(const SurdElement& x, const ConvergentPair& c, const PadicContext& ctx);

// A = A~/p^e, B = B~/p^f with A~, B~ integers prime to p.
struct PadicDecomposition {
    Int A_tilde, B_tilde;
    long e = 0, f = 0;
    bool a_zero = false;                    // A = 0: growth hypotheses not applicable
    std::optional<bool> f_ge_e;             // f >= e
    std::optional<bool> arch_dominated;     // |A~ p^(f-e)|_inf <= |B~|_inf
};

PadicDecomposition decompose(const ConvergentPair& c, const Int& p);

}  // namespace padiccf
