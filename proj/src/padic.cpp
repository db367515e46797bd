#include "padiccf/padic.hpp"

namespace padiccf {

Rat PadicDigitExpansion::reconstruct() const {
    Rat sum = 0;
    long e = start_exponent;
    for (const Int& d : digits) {
        sum += Rat(d) * p_power(p, e);
        ++e;
    }
    return sum;
}

namespace {

// Residue of a p-adic unit u (rational, v_p(u) = 0) modulo p.
Int unit_residue_mod_p(const Rat& u, const Int& p) {
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), den(u).get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::logic_error("unit_residue_mod_p: denominator not invertible");
    Int r = (num(u) % p) * dinv % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

PadicDigitExpansion padic_digits(const Rat& x, const PadicContext& ctx, std::size_t count) {
    if (x == 0) throw ZeroInput("padic_digits: digits of 0 requested");
    if (count == 0) throw ParseError("padic_digits: count must be positive");

    long r = vp(x, ctx.p).value();
    // Peel the leading p-power so the state is always a unit.
    Rat u = x * p_power(ctx.p, -r);

    PadicDigitExpansion out;
    out.p = ctx.p;
    out.mode = ctx.mode;
    out.start_exponent = r;
    out.digits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (u == 0) {
            out.digits.emplace_back(0);
            continue;
        }
        Int d = ctx.digit_of(unit_residue_mod_p(u, ctx.p));
        out.digits.push_back(d);
        u = (u - Rat(d)) / Rat(ctx.p);
    }
    return out;
}

Rat padic_floor(const Rat& x, const PadicContext& ctx) {
    if (x == 0) return Rat(0);
    Valuation v = vp(x, ctx.p);
    if (v > 0) return Rat(0);  // empty digit range
    long r = v.value();
    std::size_t count = static_cast<std::size_t>(1 - r);  // exponents r..0
    return padic_digits(x, ctx, count).reconstruct();
}

}  // namespace padiccf
