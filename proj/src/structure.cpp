#include "padiccf/structure.hpp"

#include <algorithm>
#include <cmath>

namespace padiccf {

PalindromeReport palindromic_prefixes(const std::vector<Rat>& pqs) {
    if (pqs.empty()) throw ParseError("palindromic_prefixes: empty sequence");
    PalindromeReport out;
    for (std::size_t n = 1; n <= pqs.size(); ++n) {
        bool pal = true;
        for (std::size_t j = 0; j < n / 2 && pal; ++j) pal = pqs[j] == pqs[n - 1 - j];
        if (pal) out.lengths.push_back(n);
    }
    return out;
}

CriterionReport verify_matrix_symmetry(const std::vector<ConvergentPair>& conv,
                                       const PalindromeReport& report) {
    CriterionReport rep;
    rep.criterion = "matrix-symmetry";
    if (conv.empty() || conv[0].A != 0)
        throw NonzeroB0("verify_matrix_symmetry: convergents must start from b_0 = 0");
    for (std::size_t n : report.lengths) {
        if (n >= conv.size()) break;
        bool ok = conv[n].A == conv[n - 1].B;  // A_n = B_{n-1}
        rep.record(static_cast<long>(n), ok,
                   ok ? "" : "A_n = " + conv[n].A.get_str() + " != B_{n-1} = " + conv[n - 1].B.get_str());
    }
    rep.summary = rep.holds_on_range() ? "A_n = B_{n-1} at every palindromic prefix"
                                       : "matrix symmetry violated (implementation bug)";
    return rep;
}

std::vector<RepetitionBlock> detect_repetitions(const std::vector<Rat>& pqs,
                                                std::size_t min_lambda) {
    if (pqs.empty()) throw ParseError("detect_repetitions: empty sequence");
    if (min_lambda < 2) throw ParseError("detect_repetitions: min_lambda must be >= 2");
    const std::size_t N = pqs.size();

    std::vector<RepetitionBlock> blocks;
    for (std::size_t k = 1; 2 * k <= N; ++k) {
        // maximal runs of P_k(m): b_{m+k} = b_m, m 1-based in [1, N-k]
        std::size_t m = 1;
        while (m + k <= N) {
            if (pqs[m - 1] != pqs[m + k - 1]) {
                ++m;
                continue;
            }
            std::size_t start = m;
            while (m + k <= N && pqs[m - 1] == pqs[m + k - 1]) ++m;
            std::size_t run = m - start;  // P_k holds on [start, start+run-1]
            // one maximal block per alignment offset inside the run
            for (std::size_t t = start; t < start + k && t + k <= start + run; ++t) {
                std::size_t lambda = (start + run - t) / k + 1;
                if (lambda >= min_lambda) blocks.push_back({t, k, lambda});
            }
        }
    }

    // Drop a block when a reported shorter-or-equal period k' | k already
    // forces all of its equalities (chaining b_m = b_{m+k'} = ... = b_{m+k}
    // needs P_{k'} up to position n + (lambda-1)k - 1 + (k - k')).
    std::vector<RepetitionBlock> kept;
    for (const auto& b : blocks) {
        bool implied = false;
        for (const auto& c : blocks) {
            if (&c == &b || c.k > b.k || b.k % c.k != 0) continue;
            if (c.k == b.k && c.n == b.n) continue;
            std::size_t need_end = b.n + (b.lambda - 1) * b.k - 1 + (b.k - c.k);
            if (c.n <= b.n && c.n + (c.lambda - 1) * c.k - 1 >= need_end) {
                implied = true;
                break;
            }
        }
        if (!implied) kept.push_back(b);
    }
    std::sort(kept.begin(), kept.end(), [](const RepetitionBlock& a, const RepetitionBlock& b) {
        return a.n != b.n ? a.n < b.n : a.k < b.k;
    });
    return kept;
}

double growth_statistic_value(double log_lambda, std::size_t n) {
    return log_lambda * std::sqrt(std::log(static_cast<double>(n))) / static_cast<double>(n);
}

GrowthStatistic growth_statistic(const std::vector<RepetitionBlock>& blocks) {
    GrowthStatistic out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].n < 2) {
            out.not_evaluable.push_back(i);
            continue;
        }
        out.evaluable.push_back(i);
        out.values.push_back(
            growth_statistic_value(std::log(static_cast<double>(blocks[i].lambda)), blocks[i].n));
    }
    return out;
}

}  // namespace padiccf
