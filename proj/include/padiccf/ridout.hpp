#pragma once

#include <string>
#include <vector>

#include "padiccf/lognumber.hpp"
#include "padiccf/report.hpp"
#include "padiccf/surd.hpp"

namespace padiccf {

// Monic integer polynomial x^n + a_1 x^(n-1) + ... + a_n, degree n >= 2.
// Degree 2 is checked irreducible (discriminant not a square); higher degrees
// are accepted unchecked and flagged.
class MinimalPolynomial {
  public:
    explicit MinimalPolynomial(std::vector<Int> coefficients);  // leading .. constant

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool irreducibility_checked() const { return degree() == 2; }

    Int abar() const;           // max(1, |a_1|, ..., |a_n|)
    Int coeff_abs_sum() const;  // sum |c_i| over all coefficients
    Rat evaluate(const Rat& x) const;

    // degree 2 only
    Int discriminant() const;                         // a_1^2 - 4 a_2
    SurdElement padic_root(HenselBranch branch) const;  // (-a_1 +- sqrt(disc))/2

  private:
    std::vector<Int> coeffs_;
};

// C-hat = 2 + 2 ln(2 + Abar); feeds log-space bounds, never exact verdicts.
double c_hat(const MinimalPolynomial& mp);
double c_hat_from_abar(const Int& abar);

struct RidoutConditions {
    bool delta_below_inverse_m = false;   // delta < 1/m
    bool exponent_bound = false;          // 2m(1+5d)/(m - 4(1+3d)n sqrt(m) - 2) < 2+eps
    bool eta_margin = false;              // 2 + 4(1+3d)n sqrt(m) < m
    bool all() const { return delta_below_inverse_m && exponent_bound && eta_margin; }
};

// m = floor(100 n^2 eps^-2) + 1, delta = 10^(-m 2^m) carried as the exact big
// integer log10_delta_inv = m * 2^m, the three side conditions, and the
// smallest-integer thresholds k, l from their defining inequalities
// (as LogNumbers; their magnitude is ~10^(m 2^m log10(2))).
struct RidoutParams {
    std::size_t n = 2;
    Rat epsilon;
    Int m;
    Int log10_delta_inv;
    LogNumber k, l;
    RidoutConditions conditions;
    double chat = 0.0;  // the C-hat used for k
};

// Requires n >= 2 and 0 < eps <= 1/3. abar defaults to the minimal value 1.
RidoutParams ridout_params(std::size_t n, const Rat& epsilon, const Int& abar = Int(1));

enum class BoundVariant { TheoremHalf, CorollaryFull, RemarkSingleExp, ExactKL };
const char* variant_name(BoundVariant v);

// Solution-count bound, with the audit fields the report prints.
struct CountBound {
    BoundVariant variant = BoundVariant::ExactKL;
    LogNumber bound;
    LogNumber log_term;       // the eps^-1 log C-hat part (zero-ish variants: 1)
    LogNumber exp_term;       // the exponential part
    double instantiated_C = 0.0;  // smallest constant making the proof chain hold
    std::string audit;
};

// eps <= 1/3 for TheoremHalf, <= 2/3 for the other variants.
CountBound count_bound(const MinimalPolynomial& mp, const Rat& epsilon, BoundVariant variant);

enum class IneqVariant { Half, Full };

// A coprime pair satisfying the approximation inequality exactly:
//   Half: |alpha - A/B|_p < 1/(2 |B|^(2+eps)),  Full: < 1/|B|^(2+eps),
// with B > 0 and |B| >= |A|.
struct SolutionRecord {
    Int A, B;
    long defect_valuation = 0;  // v_p(alpha - A/B)
};

// All solutions with 1 <= B <= hmax for the degree-2 p-adic root selected by
// branch (which must be a p-adic unit). Residue sieving on A; every candidate
// is verified exactly. Output sorted by (B, A); `threads` partitions the
// B-range with a deterministic merge.
std::vector<SolutionRecord> enumerate_solutions(const MinimalPolynomial& mp, const Int& p,
                                                HenselBranch branch, const Rat& epsilon,
                                                const Int& hmax, IneqVariant variant,
                                                unsigned threads = 1);

// B_{i+1} > B_i^(1+eps) for consecutive solutions with B_i >= 2, checked as
// the exact integer comparison B_{i+1}^w > B_i^(w+u). Pairs led by B_i = 1
// are excluded and listed.
CriterionReport gap_law_check(const std::vector<SolutionRecord>& solutions, const Rat& epsilon);

}  // namespace padiccf
