#include "padiccf/cf.hpp"

#include <map>

namespace padiccf {

std::string field_value_str(const FieldValue& v) {
    return std::holds_alternative<Rat>(v) ? std::get<Rat>(v).get_str() : std::get<SurdElement>(v).str();
}

const char* termination_name(TerminationKind k) {
    switch (k) {
        case TerminationKind::Finite: return "finite";
        case TerminationKind::Periodic: return "periodic";
        case TerminationKind::Truncated: return "truncated";
        case TerminationKind::PrecisionExhausted: return "precision-exhausted";
    }
    return "?";
}

namespace {

struct RatOps {
    using Elem = Rat;
    static Rat floor(const Rat& x, const PadicContext& ctx) { return padic_floor(x, ctx); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat sub(const Rat& x, const Rat& b) { return x - b; }
    static Rat invert(const Rat& x) { return 1 / x; }
    static bool key_less(const Rat& x, const Rat& y) { return cmp(x, y) < 0; }
    static FieldValue wrap(const Rat& x) { return FieldValue(x); }
};

struct SurdOps {
    using Elem = SurdElement;
    static Rat floor(const SurdElement& x, const PadicContext& ctx) { return padic_floor(x, ctx); }
    static bool is_zero(const SurdElement& x) { return x.is_zero(); }
    static SurdElement sub(const SurdElement& x, const Rat& b) { return x - b; }
    static SurdElement invert(const SurdElement& x) { return x.inverse(); }
    static bool key_less(const SurdElement& x, const SurdElement& y) { return x.key_less(y); }
    static FieldValue wrap(const SurdElement& x) { return FieldValue(x); }
};

template <class Ops>
CFExpansion expand_core(typename Ops::Elem alpha, const PadicContext& ctx, std::size_t max_terms) {
    CFExpansion out{ctx, {}, {}, {}};
    auto less = [](const typename Ops::Elem& x, const typename Ops::Elem& y) { return Ops::key_less(x, y); };
    std::map<typename Ops::Elem, std::size_t, decltype(less)> seen(less);

    for (std::size_t i = 0; i < max_terms; ++i) {
        seen.emplace(alpha, i);
        Rat b;
        try {
            b = Ops::floor(alpha, ctx);
        } catch (const PrecisionExhausted&) {
            out.termination = {TerminationKind::PrecisionExhausted, 0, 0, i};
            return out;
        }
        out.quotients.push_back(b);
        out.complete.push_back(Ops::wrap(alpha));
        if (i >= 1 && !(vp(b, ctx.p) < 0))
            throw std::logic_error("expand: v_p(b_" + std::to_string(i) + ") >= 0");

        auto rem = Ops::sub(alpha, b);
        if (Ops::is_zero(rem)) {
            out.termination = {TerminationKind::Finite, 0, 0, 0};
            return out;
        }
        alpha = Ops::invert(rem);
        auto it = seen.find(alpha);
        if (it != seen.end()) {
            out.termination = {TerminationKind::Periodic, it->second, i + 1 - it->second, 0};
            return out;
        }
    }
    out.termination = {TerminationKind::Truncated, 0, 0, max_terms};
    return out;
}

}  // namespace

CFExpansion expand(const Rat& x, const PadicContext& ctx, std::size_t max_terms) {
    if (max_terms == 0) throw ParseError("expand: max_terms must be positive");
    return expand_core<RatOps>(x, ctx, max_terms);
}

CFExpansion expand(const SurdElement& x, const PadicContext& ctx, std::size_t max_terms) {
    if (max_terms == 0) throw ParseError("expand: max_terms must be positive");
    if (x.is_rational()) return expand(x.a(), ctx, max_terms);
    require_embeddable(x.D(), ctx);

    long n = std::max(ctx.precision, 16L * static_cast<long>(max_terms));
    CFExpansion out = expand_core<SurdOps>(x, ctx.with_precision(n), max_terms);
    if (out.termination.kind == TerminationKind::PrecisionExhausted)
        out = expand_core<SurdOps>(x, ctx.with_precision(2 * n), max_terms);  // one-shot retry
    return out;
}

std::vector<Rat> unroll(const CFExpansion& cf, std::size_t count) {
    std::vector<Rat> out = cf.quotients;
    if (out.size() >= count) {
        out.resize(count);
        return out;
    }
    if (cf.termination.kind == TerminationKind::Periodic) {
        std::size_t start = cf.termination.preperiod;
        std::size_t period = cf.termination.period;
        while (out.size() < count) out.push_back(out[start + (out.size() - start) % period]);
    }
    return out;
}

Rat evaluate(const std::vector<Rat>& quotients) {
    if (quotients.empty()) throw ParseError("evaluate: empty quotient sequence");
    Rat v = quotients.back();
    for (std::size_t j = quotients.size() - 1; j-- > 0;) {
        if (v == 0)
            throw DivisionByZero("evaluate: zero complete quotient at depth " + std::to_string(j + 1), j + 1);
        v = quotients[j] + 1 / v;
    }
    return v;
}

std::vector<ConvergentPair> convergents_of(const std::vector<Rat>& quotients, const Int& p) {
    if (quotients.empty()) throw ParseError("convergents_of: empty quotient sequence");

    std::vector<ConvergentPair> out;
    out.reserve(quotients.size());
    Rat A_prev2 = 0, A_prev1 = 1, B_prev2 = 1, B_prev1 = 0;
    long vB_sum = 0, vA_sum = 0;
    const bool b0_zero = quotients[0] == 0;
    const Valuation vb0 = vp(quotients[0], p);
    // the A-side identities need a floor-representable head: b_0 = 0 or
    // v_p(b_0) <= 0 (raw sequences may violate this; skip them there)
    const bool a_sum_applies = !b0_zero && vb0 <= 0;
    const bool a_side_applies = b0_zero || vb0 < 0;  // |b_0|_p != 1
    int det_sign = -1;  // (-1)^{i+1} at i = 0

    for (std::size_t i = 0; i < quotients.size(); ++i) {
        const Rat& b = quotients[i];
        if (i >= 1 && !(vp(b, p) < 0))
            throw ParseError("convergents_of: v_p(b_" + std::to_string(i) + ") >= 0 (got " + b.get_str() + ")");

        ConvergentPair c;
        c.index = i;
        c.A = b * A_prev1 + A_prev2;
        c.B = b * B_prev1 + B_prev2;
        c.vpA = vp(c.A, p);
        c.vpB = vp(c.B, p);
        c.archA = abs(c.A);
        c.archB = abs(c.B);

        // determinant identity (pure recurrence algebra; a failure is a bug)
        if (c.A * B_prev1 - c.B * A_prev1 != det_sign)
            throw std::logic_error("convergents_of: determinant identity failed at i = " + std::to_string(i));
        det_sign = -det_sign;

        if (i >= 1) {
            vB_sum += vp(b, p).value();
            if (!(c.vpB == vB_sum))
                throw std::logic_error("convergents_of: v_p(B_i) != sum of v_p(b_j) at i = " + std::to_string(i));
        }
        if (b0_zero) {
            if (i >= 2) {
                vA_sum += vp(b, p).value();
                if (!(c.vpA == vA_sum))
                    throw std::logic_error("convergents_of: v_p(A_i) sum identity failed at i = " + std::to_string(i));
            }
        } else if (a_sum_applies) {
            vA_sum += vp(b, p).value();
            if (!(c.vpA == vA_sum))
                throw std::logic_error("convergents_of: v_p(A_i) sum identity failed at i = " + std::to_string(i));
        }

        c.arch_B_le_padic = c.vpB.is_infinite() ? c.archB == 0
                                                : cmp(c.archB, p_power(p, -c.vpB.value())) <= 0;
        if (a_side_applies)
            c.arch_A_le_padic = c.vpA.is_infinite() ? c.archA == 0
                                                    : cmp(c.archA, p_power(p, -c.vpA.value())) <= 0;

        out.push_back(std::move(c));
        A_prev2 = A_prev1;
        A_prev1 = out.back().A;
        B_prev2 = B_prev1;
        B_prev1 = out.back().B;
    }
    return out;
}

std::vector<ConvergentPair> convergents(const CFExpansion& cf) {
    auto out = convergents_of(cf.quotients, cf.context.p);
    for (const auto& c : out) {
        if (!c.arch_B_le_padic)
            throw std::logic_error("convergents: |B|_inf > |B|_p at i = " + std::to_string(c.index));
        if (c.arch_A_le_padic.has_value() && !*c.arch_A_le_padic)
            throw std::logic_error("convergents: |A|_inf > |A|_p at i = " + std::to_string(c.index));
    }
    return out;
}

Valuation approx_defect(const Rat& x, const ConvergentPair& c, const PadicContext& ctx) {
    if (c.B == 0) throw ZeroInput("approx_defect: B_i = 0");
    return vp(x - c.A / c.B, ctx.p);
}

Valuation approx_defect(const SurdElement& x, const ConvergentPair& c, const PadicContext& ctx) {
    if (c.B == 0) throw ZeroInput("approx_defect: B_i = 0");
    if (x.is_rational()) return approx_defect(x.a(), c, ctx);
    return surd_valuation(x - c.A / c.B, ctx);
}

PadicDecomposition decompose(const ConvergentPair& c, const Int& p) {
    PadicDecomposition d;
    if (c.A == 0) {
        d.a_zero = true;
        d.A_tilde = 0;
        d.e = 0;
    } else {
        d.e = -c.vpA.value();
        Rat At = c.A * p_power(p, -c.vpA.value());
        if (den(At) != 1)
            throw ParseError("decompose: A not in Z[1/p] (A = " + c.A.get_str() + ")");
        d.A_tilde = num(At);
    }
    d.f = -c.vpB.value();
    Rat Bt = c.B * p_power(p, -c.vpB.value());
    if (den(Bt) != 1) throw ParseError("decompose: B not in Z[1/p] (B = " + c.B.get_str() + ")");
    d.B_tilde = num(Bt);

    if (!d.a_zero) {
        Int g;
        mpz_gcd(g.get_mpz_t(), d.A_tilde.get_mpz_t(), d.B_tilde.get_mpz_t());
        if (g != 1)
            throw std::logic_error("decompose: gcd(A~, B~) != 1 (forced by the determinant identity)");
        d.f_ge_e = d.f >= d.e;
        // |A~ p^(f-e)|_inf <= |B~|_inf, compared exactly as rationals
        Rat lhs = abs(Rat(d.A_tilde) * p_power(p, d.f - d.e));
        d.arch_dominated = cmp(lhs, abs(Rat(d.B_tilde))) <= 0;
    }
    return d;
}

}  // namespace padiccf
