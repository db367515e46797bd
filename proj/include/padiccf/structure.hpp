#pragma once

#include <cstddef>
#include <vector>

#include "padiccf/cf.hpp"
#include "padiccf/report.hpp"

namespace padiccf {

// b_{m+k} = b_m for n <= m <= n + (lambda-1)k - 1, indices 1-based into the
// quotient sequence (b_1, b_2, ...).
struct RepetitionBlock {
    std::size_t n = 1;       // start index
    std::size_t k = 1;       // block length
    std::size_t lambda = 2;  // repetition count
};

// Prefix lengths n with (b_1, ..., b_n) palindromic, strictly increasing.
struct PalindromeReport {
    std::vector<std::size_t> lengths;
};

// All palindromic prefix lengths of (b_1, ..., b_N), by direct comparison.
PalindromeReport palindromic_prefixes(const std::vector<Rat>& pqs);

// For each palindromic n asserts A_n = B_{n-1} exactly (convergents of
// [0, b_1, ...]); a reported violation indicates an implementation bug.
CriterionReport verify_matrix_symmetry(const std::vector<ConvergentPair>& conv,
                                       const PalindromeReport& report);

// Maximal repetition blocks with lambda >= min_lambda. For every block length
// k, each maximal run of the predicate b_{m+k} = b_m yields one block at the
// run's start with the largest lambda it supports; blocks implied by a
// shorter reported period (k' | k covering the same span) are suppressed.
// Deterministic order by (n, k).
std::vector<RepetitionBlock> detect_repetitions(const std::vector<Rat>& pqs,
                                                std::size_t min_lambda = 2);

// s_i = log(lambda_i) * (log n_i)^(1/2) / n_i, natural logs, descriptive only.
// Blocks with n = 1 are not evaluable (log n = 0) and listed separately.
struct GrowthStatistic {
    std::vector<double> values;              // aligned with evaluable blocks
    std::vector<std::size_t> evaluable;      // indices into the block list
    std::vector<std::size_t> not_evaluable;  // blocks with n = 1
};

double growth_statistic_value(double log_lambda, std::size_t n);
GrowthStatistic growth_statistic(const std::vector<RepetitionBlock>& blocks);

}  // namespace padiccf
