#include "padiccf/surd.hpp"

#include <stdexcept>

namespace padiccf {

SurdElement::SurdElement(Rat a, Rat b, Int D, HenselBranch branch)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(D)), branch_(branch) {
    if (b_ != 0) {
        if (d_ <= 0) throw ParseError("SurdElement: D must be positive, got " + d_.get_str());
        if (is_perfect_square(d_))
            throw ParseError("SurdElement: D must not be a perfect square, got " + d_.get_str());
    }
}

void SurdElement::merge_fields(const SurdElement& x, const SurdElement& y, Int& d, HenselBranch& br) {
    if (x.b_ == 0) {
        d = y.d_;
        br = y.branch_;
        return;
    }
    if (y.b_ == 0) {
        d = x.d_;
        br = x.branch_;
        return;
    }
    if (x.d_ != y.d_ || x.branch_ != y.branch_)
        throw std::logic_error("SurdElement: mixing distinct fields " + x.d_.get_str() + " / " + y.d_.get_str());
    d = x.d_;
    br = x.branch_;
}

SurdElement SurdElement::operator+(const SurdElement& o) const {
    Int d;
    HenselBranch br;
    merge_fields(*this, o, d, br);
    return SurdElement(a_ + o.a_, b_ + o.b_, d, br);
}

SurdElement SurdElement::operator-(const SurdElement& o) const { return *this + (-o); }

SurdElement SurdElement::operator*(const SurdElement& o) const {
    Int d;
    HenselBranch br;
    merge_fields(*this, o, d, br);
    return SurdElement(a_ * o.a_ + b_ * o.b_ * Rat(d), a_ * o.b_ + b_ * o.a_, d, br);
}

SurdElement SurdElement::inverse() const {
    if (is_zero()) throw DivisionByZero("SurdElement: inverse of 0", 0);
    Rat n = norm();  // nonzero: D non-square forces norm != 0 for nonzero elements
    return SurdElement(a_ / n, -b_ / n, d_, branch_);
}

SurdElement SurdElement::operator/(const SurdElement& o) const { return *this * o.inverse(); }

bool SurdElement::operator==(const SurdElement& o) const {
    if (b_ == 0 && o.b_ == 0) return a_ == o.a_;
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_ && branch_ == o.branch_;
}

bool SurdElement::key_less(const SurdElement& o) const {
    int c = cmp(a_, o.a_);
    if (c != 0) return c < 0;
    return cmp(b_, o.b_) < 0;
}

std::string SurdElement::str() const {
    if (b_ == 0) return a_.get_str();
    std::string bs = b_ >= 0 ? " + " + b_.get_str() : " - " + Rat(-b_).get_str();
    return "(" + a_.get_str() + bs + "*sqrt(" + d_.get_str() + "))";
}

void require_embeddable(const Int& D, const PadicContext& ctx) {
    long v = vp_int(D, ctx.p);
    if (v % 2 != 0)
        throw NotASquare("sqrt(" + D.get_str() + ") does not exist in Q_" + ctx.p.get_str() +
                         ": v_p(D) = " + std::to_string(v) + " is odd");
    Int u = D / pow_int(ctx.p, static_cast<unsigned long>(v));
    Int um = u % ctx.p;
    if (um < 0) um += ctx.p;
    if (mpz_legendre(um.get_mpz_t(), ctx.p.get_mpz_t()) != 1)
        throw NotASquare("sqrt(" + D.get_str() + ") does not exist in Q_" + ctx.p.get_str() +
                         ": unit part is a non-residue mod p");
}

long sqrt_valuation(const Int& D, const Int& p) {
    long v = vp_int(D, p);
    if (v % 2 != 0) throw NotASquare("sqrt_valuation: v_p(D) odd");
    return v / 2;
}

Rat embedding_proxy(const SurdElement& z, const PadicContext& ctx, long N) {
    if (z.is_rational()) return z.a();
    Int x = hensel_sqrt(z.D(), ctx.p, N, z.branch());
    return z.a() + z.b() * Rat(x);
}

Valuation surd_valuation(const SurdElement& z, const PadicContext& ctx) {
    if (z.is_zero()) return Valuation::infinity();
    if (z.is_rational()) return vp(z.a(), ctx.p);
    require_embeddable(z.D(), ctx);

    long td = sqrt_valuation(z.D(), ctx.p);
    long vb = vp(z.b(), ctx.p).value() + td;  // valuation of b*sqrt(D)
    if (z.a() == 0) return Valuation::of(vb);

    long va = vp(z.a(), ctx.p).value();
    if (va != vb) return Valuation::of(std::min(va, vb));

    // Leading terms collide: v_p(z) is either m or nv - m, where the norm
    // valuation nv = v_p(z) + v_p(conj z) and min(v_p(z), v_p(conj z)) = m.
    long m = va;
    long nv = vp(z.norm(), ctx.p).value();
    if (nv == 2 * m) return Valuation::of(m);

    long vb_plain = vp(z.b(), ctx.p).value();
    long needed = nv - m - vb_plain + 1;  // proxy certifies valuations < vb_plain + N
    if (ctx.precision < needed)
        throw PrecisionExhausted("surd_valuation: need sqrt(D) mod p^" + std::to_string(needed) +
                                     ", have p^" + std::to_string(ctx.precision),
                                 needed, ctx.precision);

    Rat y = embedding_proxy(z, ctx, needed);
    Valuation vy = vp(y, ctx.p);
    if (vy.is_infinite() || vy.value() >= vb_plain + needed) return Valuation::of(nv - m);
    long v = vy.value();
    if (v != m && v != nv - m)
        throw std::logic_error("surd_valuation: proxy valuation " + std::to_string(v) +
                               " outside {" + std::to_string(m) + ", " + std::to_string(nv - m) + "}");
    return Valuation::of(v);
}

Valuation surd_valuation_exact(const SurdElement& z, const PadicContext& ctx) {
    try {
        return surd_valuation(z, ctx);
    } catch (const PrecisionExhausted& e) {
        return surd_valuation(z, ctx.with_precision(e.needed));
    }
}

Rat padic_floor(const SurdElement& z, const PadicContext& ctx) {
    if (z.is_zero()) return Rat(0);
    if (z.is_rational()) return padic_floor(z.a(), ctx);

    Valuation v = surd_valuation(z, ctx);
    if (v > 0) return Rat(0);

    // Digits on exponents [v, 0] come from the rational proxy; they match the
    // element as long as the proxy error b*(sqrt(D) - x) sits above exponent 0.
    long vb_plain = vp(z.b(), ctx.p).value();
    long needed = 1 - vb_plain;
    if (ctx.precision < needed)
        throw PrecisionExhausted("padic_floor: need sqrt(D) mod p^" + std::to_string(needed) +
                                     ", have p^" + std::to_string(ctx.precision),
                                 needed, ctx.precision);
    Rat y = embedding_proxy(z, ctx, std::max(needed, 1L));
    return padic_floor(y, ctx);
}

}  // namespace padiccf
