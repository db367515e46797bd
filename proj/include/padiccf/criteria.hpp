#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padiccf/cf.hpp"
#include "padiccf/report.hpp"
#include "padiccf/structure.hpp"

namespace padiccf {

// max(|A_i|_inf, |B_i|_inf)^4 < p^i for every i >= i0, cross-multiplied in
// integers (the p^{1/4} growth hypothesis for expansions with b_0 = 0).
CriterionReport growth_margin_check(const std::vector<ConvergentPair>& conv, const Int& p,
                                    long i0 = 1);

// At every palindromic n >= 2: v_p(x^2 - A_{n-1}/B_n) > v_p(b_1) - 2 v_p(B_n),
// i.e. |x^2 - A_{n-1}/B_n|_p < |b_1|_p / |B_n|_p^2, as exact valuations.
CriterionReport palindrome_approximation_check(const SurdElement& x,
                                               const std::vector<ConvergentPair>& conv,
                                               const PalindromeReport& report,
                                               const PadicContext& ctx);

struct SubspaceFactor {
    std::string name;
    std::string value;  // exact rational, or "p^-v" exponent form
};

// Exponent ledger of the six-factor linear-form product at a palindromic
// index, with the exact product-vs-1 verdict. Diagnostic only.
struct SubspaceProductDiagnostic {
    std::vector<SubspaceFactor> factors;
    bool product_lt_one = false;
    bool zero_factor = false;     // some linear form vanished exactly
    Rat chain_exponent;           // (3+eps)n/4 - (1-eps)n, the proof-chain budget
    bool chain_negative = false;  // chain exponent < 0
};

SubspaceProductDiagnostic subspace_product(const SurdElement& x,
                                           const std::vector<ConvergentPair>& conv,
                                           std::size_t n, const Rat& epsilon,
                                           const PadicContext& ctx);

// P eta^2 + Q eta + R = 0 for the eventually-periodic tail
// eta = [0, b_1, ..., b_{h-1}, repeat(b_h, ..., b_{h+k-1})], with the naive
// height bound max(|P|,|Q|,|R|)_inf < 2 |B_{h+k-1}|_p^2 checked exactly.
struct QuadraticRelation {
    Rat P, Q, R;
    Rat height_bound;  // 2 p^(-2 vpB_{h+k-1})
    bool height_ok = false;
    std::optional<FieldValue> eta;  // realized tail value (surd or rational)
    bool root_verified = false;     // P eta^2 + Q eta + R == 0, exact residual
};

QuadraticRelation tail_quadratic(const std::vector<Rat>& pqs, std::size_t h, std::size_t k,
                                 const PadicContext& ctx, bool realize_tail = true);

// Quasi-periodicity hypotheses: |A_i|_inf <= |B_i|_inf for i >= i0,
// k_i < C n_i for blocks with n_i >= i0, plus the block growth statistic and
// its least-squares trend slope.
struct QuasiperiodicResult {
    CriterionReport arch;      // per-index |A_i| <= |B_i|
    CriterionReport blocks;    // per-block k < C n
    GrowthStatistic statistic;
    double trend_slope = 0.0;
    std::string verdict;
};

QuasiperiodicResult quasiperiodic_check(const std::vector<ConvergentPair>& conv,
                                        const std::vector<RepetitionBlock>& blocks,
                                        const Rat& C, long i0 = 1);

}  // namespace padiccf
