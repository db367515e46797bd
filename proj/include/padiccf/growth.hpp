#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padiccf/cf.hpp"
#include "padiccf/report.hpp"
#include "padiccf/ridout.hpp"

namespace padiccf {

// Effective constant of the p-adic Liouville lower bound
// |alpha - a/b|_p >= c / max(|a|, |b|)^n, c = p^(v_p(f'(alpha))) / sum|c_i|.
struct LiouvilleConstant {
    Rat c;
    std::size_t degree = 2;
    long fprime_valuation = 0;
    Int coeff_abs_sum;
};

LiouvilleConstant liouville_constant(const MinimalPolynomial& mp, const Int& p,
                                     HenselBranch branch, long precision = 64);

// Exhaustive verification of the Liouville bound over all coprime (a, b) with
// |a| <= hmax, 1 <= b <= hmax, as exact integer comparisons; also returns the
// pair with the least slack (the tightest instance).
struct LiouvilleScan {
    LiouvilleConstant constant;
    CriterionReport report;
    std::optional<std::pair<Int, Int>> min_slack_pair;
    Rat min_slack;  // chat * max(|a|,|b|)^n / p^(v + v_f'), >= 1 iff the bound holds
};

LiouvilleScan liouville_scan(const MinimalPolynomial& mp, const Int& p, HenselBranch branch,
                             const Int& hmax);

// -vpB_n - n >= 0 at every index (the integer form that forces
// |B_n|_p >= p^n > phi^(n-1), phi the golden ratio, since p >= 3 > phi).
CriterionReport golden_bound_check(const std::vector<ConvergentPair>& conv);

// s_k = log(-vpB_k * log p) * (log k)^(1/2) / k for k >= 2, with the
// decomposition hypothesis flags (f_k >= e_k and |A~ p^(f-e)| <= |B~|)
// attached per index. Natural logs; descriptive only.
struct LogLogRow {
    std::size_t k = 0;
    long vpB = 0;
    double s = 0.0;
    std::optional<bool> f_ge_e;
    std::optional<bool> arch_dominated;
};

struct GrowthReport {
    std::vector<LogLogRow> rows;
    double max_value = 0.0;
    double trend_slope = 0.0;  // least-squares slope of s against k
};

GrowthReport loglog_statistic(const std::vector<ConvergentPair>& conv, const Int& p);

}  // namespace padiccf
