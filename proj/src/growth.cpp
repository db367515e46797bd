#include "padiccf/growth.hpp"

#include <cmath>

namespace padiccf {

namespace {

SurdElement unit_root(const MinimalPolynomial& mp, const PadicContext& ctx, HenselBranch branch) {
    if (mp.degree() != 2) throw ParseError("liouville: degree-2 minimal polynomials only");
    require_embeddable(mp.discriminant(), ctx);
    SurdElement alpha = mp.padic_root(branch);
    Valuation va = surd_valuation_exact(alpha, ctx);
    if (!(va == 0))
        throw ParseError("liouville: root is not a p-adic unit (v_p = " + va.str() +
                         "); rescale the polynomial (squarefree-unit normalization)");
    return alpha;
}

}  // namespace

LiouvilleConstant liouville_constant(const MinimalPolynomial& mp, const Int& p,
                                     HenselBranch branch, long precision) {
    PadicContext ctx(p, Mode::Browkin, precision);
    SurdElement alpha = unit_root(mp, ctx, branch);

    // f'(alpha) = 2 alpha + a_1 for x^2 + a_1 x + a_2; nonzero by irreducibility
    SurdElement fprime = alpha * Rat(2) + Rat(mp.coefficients()[1]);
    Valuation vf = surd_valuation_exact(fprime, ctx);

    LiouvilleConstant out;
    out.degree = mp.degree();
    out.fprime_valuation = vf.value();
    out.coeff_abs_sum = mp.coeff_abs_sum();
    out.c = p_power(p, out.fprime_valuation) / Rat(out.coeff_abs_sum);
    return out;
}

LiouvilleScan liouville_scan(const MinimalPolynomial& mp, const Int& p, HenselBranch branch,
                             const Int& hmax) {
    if (hmax < 1) throw ParseError("liouville_scan: hmax must be >= 1");
    PadicContext ctx(p, Mode::Browkin, 256);
    SurdElement alpha = unit_root(mp, ctx, branch);

    LiouvilleScan out;
    out.constant = liouville_constant(mp, p, branch, 256);
    out.report.criterion = "liouville";
    const long vf = out.constant.fprime_valuation;
    const Int& chat = out.constant.coeff_abs_sum;
    const unsigned long n = mp.degree();

    bool have_min = false;
    long idx = 0;
    for (Int b = 1; b <= hmax; ++b) {
        for (Int a = -hmax; a <= hmax; ++a) {
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (g != 1) continue;

            // |alpha - a/b|_p >= c / M^n  <=>  chat M^n >= p^(v + vf)
            Valuation v = surd_valuation_exact(alpha - make_rational(a, b), ctx);
            Int M = std::max(Int(abs(a)), b);
            Int lhs = chat * pow_int(M, n);
            bool ok;
            Rat slack;
            if (v.value() + vf <= 0) {
                ok = true;
                slack = Rat(lhs) * p_power(p, -(v.value() + vf));
            } else {
                Int rhs = pow_int(p, static_cast<unsigned long>(v.value() + vf));
                ok = lhs >= rhs;
                slack = make_rational(lhs, rhs);
            }
            if (!ok)
                out.report.record(idx, false,
                                  "violation at (a, b) = (" + a.get_str() + ", " + b.get_str() + ")");
            if (!have_min || cmp(slack, out.min_slack) < 0) {
                have_min = true;
                out.min_slack = slack;
                out.min_slack_pair = {a, b};
            }
            ++idx;
        }
    }
    out.report.summary =
        out.report.holds_on_range()
            ? "Liouville bound holds for all " + std::to_string(idx) + " coprime pairs, c = " +
                  out.constant.c.get_str()
            : "Liouville bound violated (implementation bug)";
    return out;
}

CriterionReport golden_bound_check(const std::vector<ConvergentPair>& conv) {
    CriterionReport rep;
    rep.criterion = "golden-bound";
    for (const auto& c : conv) {
        long margin = -c.vpB.value() - static_cast<long>(c.index);
        rep.record(static_cast<long>(c.index), margin >= 0, "margin = " + std::to_string(margin));
    }
    rep.summary = rep.holds_on_range() ? "|B_n|_p >= p^n at every index"
                                       : "golden-ratio bound accounting broke (bug)";
    return rep;
}

GrowthReport loglog_statistic(const std::vector<ConvergentPair>& conv, const Int& p) {
    GrowthReport out;
    const double logp = std::log(p.get_d());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& c : conv) {
        if (c.index < 2) continue;
        if (!(c.vpB < 0)) continue;
        LogLogRow row;
        row.k = c.index;
        row.vpB = c.vpB.value();
        double k = static_cast<double>(c.index);
        row.s = std::log(static_cast<double>(-row.vpB) * logp) * std::sqrt(std::log(k)) / k;

        PadicDecomposition d = decompose(c, p);
        row.f_ge_e = d.f_ge_e;
        row.arch_dominated = d.arch_dominated;

        out.max_value = std::max(out.max_value, row.s);
        sx += k;
        sy += row.s;
        sxx += k * k;
        sxy += k * row.s;
        out.rows.push_back(std::move(row));
    }
    if (out.rows.size() >= 2) {
        double cnt = static_cast<double>(out.rows.size());
        double denom = cnt * sxx - sx * sx;
        out.trend_slope = denom != 0.0 ? (cnt * sxy - sx * sy) / denom : 0.0;
    }
    return out;
}

}  // namespace padiccf
