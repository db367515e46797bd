#include "padiccf/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace padiccf {

namespace {

void require_b0_zero(const std::vector<ConvergentPair>& conv, const char* who) {
    if (conv.empty() || conv[0].A != 0)
        throw NonzeroB0(std::string(who) + ": expansion must have b_0 = 0");
}

}  // namespace

CriterionReport growth_margin_check(const std::vector<ConvergentPair>& conv, const Int& p, long i0) {
    require_b0_zero(conv, "growth_margin_check");
    CriterionReport rep;
    rep.criterion = "growth-margin";
    for (std::size_t i = std::max<long>(1, i0); i < conv.size(); ++i) {
        const Rat m = std::max(conv[i].archA, conv[i].archB);
        // m^4 < p^i  <=>  num(m)^4 < p^i den(m)^4
        Int lhs = pow_int(num(m), 4);
        Int rhs = pow_int(p, static_cast<unsigned long>(i)) * pow_int(den(m), 4);
        bool ok = lhs < rhs;
        rep.record(static_cast<long>(i), ok,
                   "max(|A|,|B|) = " + m.get_str() + (ok ? "" : " breaches p^{i/4}"));
    }
    rep.summary = rep.holds_on_range() ? "max(|A_i|,|B_i|)^{1/i} < p^{1/4} on range"
                                       : "growth hypothesis fails";
    return rep;
}

CriterionReport palindrome_approximation_check(const SurdElement& x,
                                               const std::vector<ConvergentPair>& conv,
                                               const PalindromeReport& report,
                                               const PadicContext& ctx) {
    require_b0_zero(conv, "palindrome_approximation_check");
    if (conv.size() < 2) throw IndexOutOfRange("palindrome_approximation_check: need >= 2 convergents");
    long v_b1 = conv[1].vpB.value();  // B_1 = b_1

    CriterionReport rep;
    rep.criterion = "palindrome-approximation";
    for (std::size_t n : report.lengths) {
        if (n < 2) continue;  // A_{n-1}/B_n starts making sense at n = 2
        if (n >= conv.size()) break;
        SurdElement lhs = x * x - conv[n - 1].A / conv[n].B;
        Valuation vl = surd_valuation_exact(lhs, ctx);
        long v_rhs = v_b1 - 2 * conv[n].vpB.value();
        bool ok = vl > v_rhs;
        rep.record(static_cast<long>(n), ok,
                   "v(x^2 - A_{n-1}/B_n) = " + vl.str() + " vs v(b_1) - 2 v(B_n) = " + std::to_string(v_rhs));
    }
    rep.summary = rep.holds_on_range() ? "palindromic approximation inequality holds at every checked n"
                                       : "inequality fails";
    return rep;
}

SubspaceProductDiagnostic subspace_product(const SurdElement& x,
                                           const std::vector<ConvergentPair>& conv,
                                           std::size_t n, const Rat& epsilon,
                                           const PadicContext& ctx) {
    require_b0_zero(conv, "subspace_product");
    if (epsilon < 0) throw EpsilonOutOfRange("subspace_product: epsilon must be >= 0");
    if (n < 1 || n >= conv.size()) throw IndexOutOfRange("subspace_product: index n out of range");
    if (conv[n].A != conv[n - 1].B)
        throw NotPalindromic("subspace_product: A_n != B_{n-1}, index " + std::to_string(n) +
                             " is not palindromic");

    const ConvergentPair& cn = conv[n];
    const ConvergentPair& cp = conv[n - 1];

    SubspaceProductDiagnostic out;
    Rat arch = abs(cn.A * cn.B * cp.A);
    Valuation v1 = surd_valuation_exact(x * cn.B - cn.A, ctx);   // |B_n x - A_n|_p
    Valuation v2 = surd_valuation_exact(x * (-cn.A) + cp.A, ctx);  // |A_{n-1} - x A_n|_p
    Valuation v3 = cn.vpB;

    long vmin = 0;
    bool have_vmin = false;
    for (const Valuation& v : {cn.vpA, cn.vpB, cp.vpA}) {
        if (v.is_infinite()) continue;
        vmin = have_vmin ? std::min(vmin, v.value()) : v.value();
        have_vmin = true;
    }
    Rat march = std::max({cn.archA, cn.archB, cp.archA});

    out.factors.push_back({"|A_n B_n A_{n-1}|_inf", arch.get_str()});
    out.factors.push_back({"|B_n x - A_n|_p", "p^-" + v1.str()});
    out.factors.push_back({"|A_{n-1} - x A_n|_p", "p^-" + v2.str()});
    out.factors.push_back({"|B_n|_p", "p^-" + v3.str()});
    out.factors.push_back({"max arch^eps base", march.get_str()});
    out.factors.push_back({"max p-norm^eps exponent", std::to_string(-vmin)});

    if (arch == 0 || v1.is_infinite() || v2.is_infinite()) {
        out.zero_factor = true;
        out.product_lt_one = true;
    } else {
        // product = arch * p^-(v1+v2+v3) * march^eps * p^(-vmin * eps) < 1,
        // raised to the w-th power with eps = u/w
        long u = num(epsilon).get_si();
        long w = den(epsilon).get_si();
        long E = w * (v1.value() + v2.value() + v3.value()) + u * vmin;
        Rat lhs = pow_rat(arch, w) * pow_rat(march, u);
        out.product_lt_one = cmp(lhs, p_power(ctx.p, E)) < 0;
    }

    out.chain_exponent = (Rat(3) + epsilon) * Rat(static_cast<long>(n)) / 4 -
                         (Rat(1) - epsilon) * Rat(static_cast<long>(n));
    out.chain_negative = out.chain_exponent < 0;
    return out;
}

QuadraticRelation tail_quadratic(const std::vector<Rat>& pqs, std::size_t h, std::size_t k,
                                 const PadicContext& ctx, bool realize_tail) {
    if (h < 1 || k < 1) throw IndexOutOfRange("tail_quadratic: h, k must be >= 1");
    if (pqs.size() < h + k - 1)
        throw IndexOutOfRange("tail_quadratic: need quotients through index " + std::to_string(h + k - 1));

    // convergents of [0, b_1, ..., b_{h+k-1}] plus the seed pairs at -1, -2
    std::vector<Rat> full;
    full.reserve(h + k);
    full.emplace_back(0);
    for (std::size_t i = 0; i < h + k - 1; ++i) full.push_back(pqs[i]);
    auto conv = convergents_of(full, ctx.p);

    auto A = [&](long i) -> Rat {
        if (i == -1) return Rat(1);
        if (i == -2) return Rat(0);
        return conv[static_cast<std::size_t>(i)].A;
    };
    auto B = [&](long i) -> Rat {
        if (i == -1) return Rat(0);
        if (i == -2) return Rat(1);
        return conv[static_cast<std::size_t>(i)].B;
    };

    const long hh = static_cast<long>(h), kk = static_cast<long>(k);
    QuadraticRelation rel;
    rel.P = B(hh - 2) * B(hh + kk - 1) - B(hh - 1) * B(hh + kk - 2);
    rel.Q = B(hh - 1) * A(hh + kk - 2) + A(hh - 1) * B(hh + kk - 2) -
            A(hh - 2) * B(hh + kk - 1) - B(hh - 2) * A(hh + kk - 1);
    rel.R = A(hh - 2) * A(hh + kk - 1) - A(hh - 1) * A(hh + kk - 2);

    long vB_last = conv[h + k - 1].vpB.value();
    rel.height_bound = 2 * p_power(ctx.p, -2 * vB_last);
    Rat height = std::max({abs(rel.P), abs(rel.Q), abs(rel.R)});
    rel.height_ok = cmp(height, rel.height_bound) < 0;

    if (!realize_tail) return rel;

    // Realize eta as the root of P x^2 + Q x + R with v_p(eta) = -v_p(b_1)
    // (eta = [0, b_1, ...] forces v_p(eta) = -v_p(alpha_1)).
    long v_eta = -vp(pqs[0], ctx.p).value();
    if (rel.P == 0) {
        if (rel.Q == 0) return rel;  // degenerate, nothing to realize
        Rat eta = -rel.R / rel.Q;
        rel.eta = FieldValue(eta);
        rel.root_verified = rel.Q * eta + rel.R == 0;
        return rel;
    }

    Rat disc = rel.Q * rel.Q - 4 * rel.P * rel.R;
    if (disc == 0) {
        Rat eta = -rel.Q / (2 * rel.P);
        rel.eta = FieldValue(eta);
        rel.root_verified = rel.P * eta * eta + rel.Q * eta + rel.R == 0;
        return rel;
    }

    std::vector<FieldValue> candidates;
    Int sq_probe = num(disc) * den(disc);
    if (is_perfect_square(sq_probe)) {
        // rational roots: sqrt(disc) = sqrt(num*den)/den
        Int root;
        mpz_sqrt(root.get_mpz_t(), sq_probe.get_mpz_t());
        Rat sq = make_rational(root, den(disc));
        candidates.emplace_back(Rat((-rel.Q + sq) / (2 * rel.P)));
        candidates.emplace_back(Rat((-rel.Q - sq) / (2 * rel.P)));
    } else if (sq_probe > 0) {
        Rat a = -rel.Q / (2 * rel.P);
        Rat b = 1 / (2 * rel.P * Rat(den(disc)));
        candidates.emplace_back(SurdElement(a, b, sq_probe));
        candidates.emplace_back(SurdElement(a, -b, sq_probe));
    } else {
        return rel;  // negative discriminant: no real quadratic realization
    }

    std::vector<FieldValue> matching;
    for (const auto& cand : candidates) {
        Valuation v = std::holds_alternative<Rat>(cand)
                          ? vp(std::get<Rat>(cand), ctx.p)
                          : surd_valuation_exact(std::get<SurdElement>(cand), ctx);
        if (v == v_eta) matching.push_back(cand);
    }
    if (matching.size() > 1) {
        // Disambiguate conjugates by convergent proximity: extend the tail
        // periodically until 1/|B_m|_p^2 drops below the fixed p-adic
        // distance between the two roots, where only the tail value survives
        // v(cand - A_m/B_m) > -2 v_p(B_m).
        Valuation vdiff =
            surd_valuation_exact(as_surd(matching[0]) - as_surd(matching[1]), ctx);
        std::vector<Rat> ext = full;
        auto conv2 = convergents_of(ext, ctx.p);
        while (!vdiff.is_infinite() && -2 * conv2.back().vpB.value() <= vdiff.value()) {
            ext.push_back(ext[ext.size() - k]);
            conv2 = convergents_of(ext, ctx.p);
        }
        const ConvergentPair& last = conv2.back();
        std::vector<FieldValue> still;
        for (const auto& cand : matching) {
            SurdElement diff = as_surd(cand) - last.A / last.B;
            Valuation v = surd_valuation_exact(diff, ctx);
            if (v > -2 * last.vpB.value()) still.push_back(cand);
        }
        matching = std::move(still);
    }
    if (matching.empty()) return rel;
    if (matching.size() > 1)
        throw std::logic_error("tail_quadratic: tail root selection ambiguous");

    rel.eta = matching[0];
    SurdElement eta = as_surd(matching[0]);
    SurdElement residual = eta * eta * rel.P + eta * rel.Q + rel.R;
    rel.root_verified = residual.is_zero();
    return rel;
}

QuasiperiodicResult quasiperiodic_check(const std::vector<ConvergentPair>& conv,
                                        const std::vector<RepetitionBlock>& blocks,
                                        const Rat& C, long i0) {
    if (C <= 0) throw ParseError("quasiperiodic_check: C must be positive");
    QuasiperiodicResult out;
    out.arch.criterion = "quasi-periodic/arch";
    for (std::size_t i = std::max<long>(0, i0); i < conv.size(); ++i) {
        bool ok = cmp(conv[i].archA, conv[i].archB) <= 0;
        out.arch.record(static_cast<long>(i), ok,
                        "|A_i| = " + conv[i].archA.get_str() + ", |B_i| = " + conv[i].archB.get_str());
    }

    out.blocks.criterion = "quasi-periodic/gap";
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (static_cast<long>(blocks[j].n) < i0) continue;
        bool ok = Rat(static_cast<long>(blocks[j].k)) < C * Rat(static_cast<long>(blocks[j].n));
        out.blocks.record(static_cast<long>(j), ok,
                          "n = " + std::to_string(blocks[j].n) + ", k = " + std::to_string(blocks[j].k));
    }

    out.statistic = growth_statistic(blocks);
    // least-squares slope of s against n over evaluable blocks
    if (out.statistic.values.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double cnt = static_cast<double>(out.statistic.values.size());
        for (std::size_t j = 0; j < out.statistic.values.size(); ++j) {
            double xn = static_cast<double>(blocks[out.statistic.evaluable[j]].n);
            double y = out.statistic.values[j];
            sx += xn;
            sy += y;
            sxx += xn * xn;
            sxy += xn * y;
        }
        double denom = cnt * sxx - sx * sx;
        out.trend_slope = denom != 0.0 ? (cnt * sxy - sx * sy) / denom : 0.0;
    }

    if (blocks.empty())
        out.verdict = "no quasi-periodic structure detected";
    else if (out.arch.holds_on_range() && out.blocks.holds_on_range())
        out.verdict = "hypotheses hold on observed range";
    else if (!out.arch.holds_on_range())
        out.verdict = "|A_i| <= |B_i| fails first at i = " + std::to_string(*out.arch.first_violation);
    else
        out.verdict = "k < C n fails first at block " + std::to_string(*out.blocks.first_violation);
    return out;
}

}  // namespace padiccf
