#include "padiccf/ridout.hpp"

#include <cmath>
#include <thread>

namespace padiccf {

MinimalPolynomial::MinimalPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 3) throw ParseError("MinimalPolynomial: degree must be >= 2");
    if (coeffs_[0] != 1) throw ParseError("MinimalPolynomial: must be monic (leading coefficient 1)");
    if (degree() == 2 && is_perfect_square(discriminant()))
        throw ParseError("MinimalPolynomial: reducible (discriminant is a perfect square)");
}

Int MinimalPolynomial::abar() const {
    Int m = 1;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) m = std::max(m, Int(abs(coeffs_[i])));
    return m;
}

Int MinimalPolynomial::coeff_abs_sum() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += abs(c);
    return s;
}

Rat MinimalPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (const Int& c : coeffs_) acc = acc * x + Rat(c);
    return acc;
}

Int MinimalPolynomial::discriminant() const {
    if (degree() != 2) throw ParseError("discriminant: degree 2 only");
    return coeffs_[1] * coeffs_[1] - 4 * coeffs_[2];
}

SurdElement MinimalPolynomial::padic_root(HenselBranch branch) const {
    if (degree() != 2) throw ParseError("padic_root: degree 2 only");
    Int disc = discriminant();
    if (disc <= 0)
        throw ParseError("padic_root: discriminant " + disc.get_str() +
                         " is not positive (no real quadratic realization)");
    Rat a = make_rational(-coeffs_[1], 2);
    Rat b = branch == HenselBranch::PlusRoot ? make_rational(1, 2) : make_rational(-1, 2);
    return SurdElement(a, b, disc, HenselBranch::PlusRoot);
}

double c_hat_from_abar(const Int& abar) { return 2.0 + 2.0 * std::log(2.0 + abar.get_d()); }
double c_hat(const MinimalPolynomial& mp) { return c_hat_from_abar(mp.abar()); }

const char* variant_name(BoundVariant v) {
    switch (v) {
        case BoundVariant::TheoremHalf: return "theorem-half";
        case BoundVariant::CorollaryFull: return "corollary-full";
        case BoundVariant::RemarkSingleExp: return "remark-single-exp";
        case BoundVariant::ExactKL: return "exact-kl";
    }
    return "?";
}

namespace {

// delta = 10^(-m 2^m) is never materialized. The side conditions have LHS
// increasing in delta, so checking them at the rigorous upper bound
// delta <= 1e-9 (m 2^m >= 9 always holds here) certifies them for the
// actual delta. sqrt(m) comparisons are settled by squaring.
const Rat kDeltaUpper = make_rational(1, 1000000000);

RidoutConditions check_conditions(const Int& m, std::size_t n, const Rat& epsilon,
                                  const Int& log10_delta_inv) {
    RidoutConditions c;

    // delta < 1/m  <=>  m < 10^(m 2^m): compare digit counts exactly
    std::size_t digits = mpz_sizeinbase(m.get_mpz_t(), 10);
    c.delta_below_inverse_m = Int(static_cast<unsigned long>(digits)) <= log10_delta_inv;

    const Rat nn(static_cast<long>(n));
    const Rat T = 4 * (1 + 3 * kDeltaUpper) * nn;  // coefficient of sqrt(m)

    // eta margin: 2 + T sqrt(m) < m  <=>  T^2 m < (m-2)^2 when m > 2
    if (m > 2) {
        Rat lhs = T * T * Rat(m);
        Rat rhs = Rat(m - 2) * Rat(m - 2);
        c.eta_margin = cmp(lhs, rhs) < 0;
    }

    // exponent bound: 2m(1+5d) < (2+eps)(m - T sqrt(m) - 2), denominator
    // positive by the eta margin. Isolate the sqrt term and square.
    if (c.eta_margin) {
        Rat S = (2 + epsilon) * Rat(m - 2) - 2 * Rat(m) * (1 + 5 * kDeltaUpper);
        if (S > 0) {
            Rat lhs = (2 + epsilon) * (2 + epsilon) * T * T * Rat(m);
            c.exponent_bound = cmp(lhs, S * S) < 0;
        }
    }
    return c;
}

}  // namespace

RidoutParams ridout_params(std::size_t n, const Rat& epsilon, const Int& abar) {
    if (n < 2) throw ParseError("ridout_params: degree must be >= 2");
    if (epsilon <= 0 || epsilon > make_rational(1, 3))
        throw EpsilonOutOfRange("ridout_params: need 0 < epsilon <= 1/3, got " + epsilon.get_str());

    RidoutParams out;
    out.n = n;
    out.epsilon = epsilon;

    // m = floor(100 n^2 / eps^2) + 1
    Rat m_rat = 100 * Rat(static_cast<long>(n * n)) / (epsilon * epsilon);
    Int m = num(m_rat) / den(m_rat);  // floor (positive)
    m += 1;
    out.m = m;

    // log10(1/delta) = m * 2^m, exact; 2^m is materialized, so keep m sane
    if (m > 20000000)
        throw ParseError("ridout_params: m = " + m.get_str() + " too large (epsilon too small)");
    out.log10_delta_inv = m * pow_int(2, m.get_ui());

    out.conditions = check_conditions(m, n, epsilon, out.log10_delta_inv);
    out.chat = c_hat_from_abar(abar);

    // l: smallest integer with (1+eps)^l > 2/delta, i.e.
    //    l > (ln 2 + L ln 10) / ln(1+eps) with L = m 2^m
    const double ln1pe = std::log(Rat(1 + epsilon).get_d());
    LogNumber L = LogNumber::from_integer(out.log10_delta_inv);
    out.l = L * LogNumber::from_double(std::log(10.0) / ln1pe) +
            LogNumber::from_double(std::log(2.0) / ln1pe + 1.0);

    // k: smallest integer with (1+eps)^(k-2) ln 2 > C-hat m delta^-2, i.e.
    //    k > (ln C-hat + ln m + 2 L ln 10 - ln ln 2) / ln(1+eps) + 2
    double small = (std::log(out.chat) + std::log(m.get_d()) - std::log(std::log(2.0))) / ln1pe + 3.0;
    out.k = L * LogNumber::from_double(2.0 * std::log(10.0) / ln1pe) + LogNumber::from_double(small);
    return out;
}

namespace {

// Exponential term of the theorem bound with the smallest workable constant:
// exp(C n^2 eps^-2) = c3 m^2 2^m / eps exactly, where c1 = 2 + 2 ln 10,
// c2 = 2 + 4 ln 10 and c3 = (c2 + (m-1) c1)/m.
struct TheoremExp {
    LogNumber value;
    double instantiated_C;
};

TheoremExp theorem_exp_term(std::size_t n, const Rat& epsilon, const Int& m) {
    const double c1 = 2.0 + 2.0 * std::log(10.0);
    const double c2 = 2.0 + 4.0 * std::log(10.0);
    double md = m.get_d();
    double c3 = (c2 + (md - 1.0) * c1) / md;

    if (!m.fits_ulong_p()) throw ParseError("count_bound: m too large");
    LogNumber val = LogNumber::from_double(c3) * LogNumber::from_integer(m) *
                    LogNumber::from_integer(m) *
                    LogNumber::from_log10(0, m.get_d() * 0.30102999566398119521) *
                    LogNumber::from_rational(1 / epsilon);

    double n2e2 = static_cast<double>(n * n) * Rat(1 / (epsilon * epsilon)).get_d();
    double C = (std::log(c3) + 2.0 * std::log(md) + md * std::log(2.0) +
                std::log(Rat(1 / epsilon).get_d())) /
               n2e2;
    return {val, C};
}

}  // namespace

CountBound count_bound(const MinimalPolynomial& mp, const Rat& epsilon, BoundVariant variant) {
    const std::size_t n = mp.degree();
    const double chat = c_hat(mp);
    const Rat third = make_rational(1, 3), two_thirds = make_rational(2, 3);

    CountBound out;
    out.variant = variant;

    switch (variant) {
        case BoundVariant::TheoremHalf: {
            if (epsilon <= 0 || epsilon > third)
                throw EpsilonOutOfRange("count_bound(theorem-half): need 0 < eps <= 1/3");
            RidoutParams rp = ridout_params(n, epsilon, mp.abar());
            out.log_term = LogNumber::from_double(2.0 * Rat(1 / epsilon).get_d() * std::log(chat));
            TheoremExp ex = theorem_exp_term(n, epsilon, rp.m);
            out.exp_term = ex.value;
            out.instantiated_C = ex.instantiated_C;
            out.bound = out.log_term + out.exp_term;
            out.audit = "2 eps^-1 log C-hat + exp(C n^2 eps^-2), C = " + std::to_string(ex.instantiated_C);
            break;
        }
        case BoundVariant::CorollaryFull: {
            if (epsilon <= 0 || epsilon > two_thirds)
                throw EpsilonOutOfRange("count_bound(corollary-full): need 0 < eps <= 2/3");
            // large solutions: theorem at eps/2; small ones: 4 * 4^(2/eps)
            Rat half_eps = epsilon / 2;
            RidoutParams rp = ridout_params(n, half_eps, mp.abar());
            out.log_term = LogNumber::from_double(4.0 * Rat(1 / epsilon).get_d() * std::log(chat));
            TheoremExp ex = theorem_exp_term(n, half_eps, rp.m);
            LogNumber small_count =
                LogNumber::from_integer(4) * LogNumber::from_integer(4).pow(2 / epsilon);
            out.exp_term = ex.value + small_count;
            double n2e2 = static_cast<double>(n * n) * Rat(1 / (epsilon * epsilon)).get_d();
            out.instantiated_C = out.exp_term.log10_approx() * std::log(10.0) / n2e2;
            out.bound = out.log_term + out.exp_term;
            out.audit = "4 eps^-1 log C-hat + exp(C1 n^2 eps^-2), C1 = " + std::to_string(out.instantiated_C);
            break;
        }
        case BoundVariant::RemarkSingleExp: {
            if (epsilon <= 0 || epsilon > two_thirds)
                throw EpsilonOutOfRange("count_bound(remark-single-exp): need 0 < eps <= 2/3");
            CountBound coro = count_bound(mp, epsilon, BoundVariant::CorollaryFull);
            double c2 = 4.0 * std::log(chat);
            double c3 = std::max(c2, coro.instantiated_C);
            double c1 = static_cast<double>(n * n) * std::log(2.0) + c3;
            double log10v = c1 * Rat(1 / (epsilon * epsilon)).get_d() * 0.43429448190325182765;
            if (!std::isfinite(log10v)) throw ParseError("count_bound: exponent overflows");
            double fl = std::floor(log10v);
            out.exp_term = LogNumber::from_log10(Int(static_cast<long>(fl)), log10v - fl);
            out.instantiated_C = c1;
            out.bound = out.exp_term;
            out.log_term = LogNumber();  // = 1, unused by this form
            out.audit = "exp(c1 eps^-2), c1 = n^2 log 2 + max(4 log C-hat, C1) = " + std::to_string(c1);
            break;
        }
        case BoundVariant::ExactKL: {
            if (epsilon <= 0 || epsilon > third)
                throw EpsilonOutOfRange("count_bound(exact-kl): need 0 < eps <= 1/3");
            RidoutParams rp = ridout_params(n, epsilon, mp.abar());
            out.log_term = rp.k;
            out.exp_term = LogNumber::from_integer(rp.m - 1) * rp.l;
            out.bound = out.log_term + out.exp_term;
            out.instantiated_C = 0.0;
            out.audit = "k + (m-1) l from the defining inequalities, m = " + rp.m.get_str();
            break;
        }
    }
    return out;
}

namespace {

// smallest v with p^(v w) > rhs
long min_defect_valuation(const Int& p, long w, const Int& rhs) {
    Int pw = pow_int(p, static_cast<unsigned long>(w));
    Int acc = 1;
    long v = 0;
    while (acc <= rhs) {
        acc *= pw;
        ++v;
    }
    return v;
}

struct EnumShared {
    PadicContext ctx;
    SurdElement alpha;
    Int root_residue;  // alpha mod p^vmax
    long vmax;
    long u, w;
    IneqVariant variant;
};

bool satisfies_inequality(const EnumShared& sh, const Int& B, long v) {
    if (v <= 0) return false;
    // p^(v w) > (2^w) B^(2w+u)  (Half), or > B^(2w+u)  (Full)
    Int rhs = pow_int(B, static_cast<unsigned long>(2 * sh.w + sh.u));
    if (sh.variant == IneqVariant::Half) rhs <<= static_cast<unsigned long>(sh.w);
    return pow_int(sh.ctx.p, static_cast<unsigned long>(v * sh.w)) > rhs;
}

void enumerate_range(const EnumShared& sh, const Int& b_begin, const Int& b_end,
                     std::vector<SolutionRecord>& out) {
    for (Int B = b_begin; B <= b_end; ++B) {
        if (B % sh.ctx.p == 0) continue;  // |alpha - A/B|_p >= p for a unit alpha

        Int rhs = pow_int(B, static_cast<unsigned long>(2 * sh.w + sh.u));
        if (sh.variant == IneqVariant::Half) rhs <<= static_cast<unsigned long>(sh.w);
        long vmin = min_defect_valuation(sh.ctx.p, sh.w, rhs);
        if (vmin > sh.vmax)
            throw std::logic_error("enumerate_solutions: sieve modulus exceeded budget");

        Int mod = pow_int(sh.ctx.p, static_cast<unsigned long>(vmin));
        Int target = B * (sh.root_residue % mod) % mod;  // A = B alpha (mod p^vmin)

        // candidates A in [-B, B] congruent to target: smallest one >= -B
        Int span = target + B;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), span.get_mpz_t(), mod.get_mpz_t());
        Int a0 = target - q * mod;
        for (Int A = a0; A <= B; A += mod) {
            Int g;
            mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
            if (g != 1) continue;
            SurdElement diff = sh.alpha - make_rational(A, B);
            Valuation v = surd_valuation_exact(diff, sh.ctx);
            if (v.is_infinite()) continue;  // cannot happen for irrational alpha
            if (satisfies_inequality(sh, B, v.value()))
                out.push_back({A, B, v.value()});
        }
    }
}

}  // namespace

std::vector<SolutionRecord> enumerate_solutions(const MinimalPolynomial& mp, const Int& p,
                                                HenselBranch branch, const Rat& epsilon,
                                                const Int& hmax, IneqVariant variant,
                                                unsigned threads) {
    if (mp.degree() != 2)
        throw ParseError("enumerate_solutions: restricted to degree-2 minimal polynomials");
    if (epsilon <= 0) throw EpsilonOutOfRange("enumerate_solutions: epsilon must be positive");
    if (hmax < 1) return {};

    PadicContext probe(p, Mode::Browkin, 64);
    require_embeddable(mp.discriminant(), probe);
    SurdElement alpha = mp.padic_root(branch);
    Valuation va = surd_valuation_exact(alpha, probe);
    if (!(va == 0))
        throw ParseError("enumerate_solutions: root is not a p-adic unit (v_p = " + va.str() +
                         "); rescale the polynomial (squarefree-unit normalization)");

    if (!num(epsilon).fits_slong_p() || !den(epsilon).fits_slong_p())
        throw EpsilonOutOfRange("enumerate_solutions: epsilon numerator/denominator too large");
    const long u = num(epsilon).get_si();
    const long w = den(epsilon).get_si();

    // residue budget: vmin at B = hmax, plus slack for exact verification
    Int rhs_max = pow_int(hmax, static_cast<unsigned long>(2 * w + u)) << static_cast<unsigned long>(w);
    long vmax = min_defect_valuation(p, w, rhs_max) + 2;

    EnumShared sh{probe.with_precision(vmax + 64), alpha, Int(0), vmax, u, w, variant};
    Int x = hensel_sqrt(mp.discriminant(), p, vmax, alpha.b() > 0 ? HenselBranch::PlusRoot
                                                                  : HenselBranch::MinusRoot);
    Int mod = pow_int(p, static_cast<unsigned long>(vmax));
    Int inv2;
    Int two = 2;
    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), mod.get_mpz_t());
    Int a1 = mp.coefficients()[1];
    sh.root_residue = ((x - a1) % mod * inv2) % mod;
    if (sh.root_residue < 0) sh.root_residue += mod;

    unsigned T = std::max(1u, threads);
    if (Int(static_cast<unsigned long>(T)) > hmax) T = static_cast<unsigned>(hmax.get_ui());
    if (T == 1) {
        std::vector<SolutionRecord> out;
        enumerate_range(sh, 1, hmax, out);
        return out;
    }

    std::vector<std::vector<SolutionRecord>> buckets(T);
    std::vector<std::thread> pool;
    Int chunk = (hmax + T - 1) / T;
    for (unsigned t = 0; t < T; ++t) {
        Int lo = Int(1) + chunk * t;
        Int hi = std::min(Int(chunk * (t + 1)), hmax);
        if (lo > hmax) break;
        pool.emplace_back([&, t, lo, hi] { enumerate_range(sh, lo, hi, buckets[t]); });
    }
    for (auto& th : pool) th.join();

    std::vector<SolutionRecord> out;  // chunk order keeps (B, A) sorted
    for (auto& b : buckets)
        for (auto& s : b) out.push_back(std::move(s));
    return out;
}

CriterionReport gap_law_check(const std::vector<SolutionRecord>& solutions, const Rat& epsilon) {
    if (epsilon <= 0) throw EpsilonOutOfRange("gap_law_check: epsilon must be positive");
    for (std::size_t i = 1; i < solutions.size(); ++i)
        if (!(solutions[i - 1].B < solutions[i].B))
            throw UnsortedInput("gap_law_check: solutions must have strictly increasing B");

    if (!num(epsilon).fits_ulong_p() || !den(epsilon).fits_ulong_p())
        throw EpsilonOutOfRange("gap_law_check: epsilon numerator/denominator too large");
    const unsigned long u = num(epsilon).get_ui();
    const unsigned long w = den(epsilon).get_ui();

    CriterionReport rep;
    rep.criterion = "gap-law";
    for (std::size_t i = 0; i + 1 < solutions.size(); ++i) {
        const Int& b0 = solutions[i].B;
        const Int& b1 = solutions[i + 1].B;
        if (b0 < 2) {
            rep.record(static_cast<long>(i), true, "B_i = 1: pair excluded (log undefined)");
            continue;
        }
        bool ok = pow_int(b1, w) > pow_int(b0, w + u);
        rep.record(static_cast<long>(i), ok,
                   "B_i = " + b0.get_str() + ", B_{i+1} = " + b1.get_str() +
                       (ok ? "" : ": B_{i+1}^w <= B_i^{w+u}"));
    }
    rep.summary = rep.holds_on_range() ? "gap law holds for every consecutive pair with B_i >= 2"
                                       : "gap law violated";
    return rep;
}

}  // namespace padiccf
