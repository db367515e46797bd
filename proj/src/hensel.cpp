#include "padiccf/hensel.hpp"

namespace padiccf {

Int sqrt_mod_p(const Int& a, const Int& p) {
    Int u = a % p;
    if (u < 0) u += p;
    if (u == 0) return Int(0);
    if (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) != 1)
        throw NotASquare("sqrt_mod_p: " + a.get_str() + " is not a quadratic residue mod " + p.get_str());

    // p = q * 2^s + 1 with q odd
    Int q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    if (s == 1) {  // p = 3 mod 4: direct exponentiation
        Int e = (p + 1) / 4;
        Int r;
        mpz_powm(r.get_mpz_t(), u.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }

    // find a non-residue z
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    Int c, t, r, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), u.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), u.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
            if (i == m) throw NotASquare("sqrt_mod_p: Tonelli-Shanks failed (non-residue)");
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

Int hensel_sqrt(const Int& D, const Int& p, long N, HenselBranch branch) {
    if (D == 0) throw ZeroInput("hensel_sqrt: D must be nonzero");
    if (N <= 0) throw ParseError("hensel_sqrt: precision must be positive");

    long v = vp_int(D, p);
    if (v % 2 != 0)
        throw NotASquare("hensel_sqrt: v_p(D) = " + std::to_string(v) + " is odd, no root in Q_p");
    long t = v / 2;
    Int u = D / pow_int(p, static_cast<unsigned long>(v));

    Int r0 = sqrt_mod_p(u, p);  // unit root, r0 != 0
    Int other = p - r0;
    Int seed = r0 <= other ? r0 : other;  // PlusRoot seed

    // Newton lifting x <- x - (x^2 - u) / (2x), doubling the certified exponent.
    Int x = seed;
    long have = 1;
    Int pk = p;
    while (have < N) {
        long next = std::min(2 * have, N);
        pk = pow_int(p, static_cast<unsigned long>(next));
        Int twox_inv;
        Int twox = 2 * x % pk;
        if (mpz_invert(twox_inv.get_mpz_t(), twox.get_mpz_t(), pk.get_mpz_t()) == 0)
            throw std::logic_error("hensel_sqrt: 2x not invertible");
        x = (x - (x * x - u) % pk * twox_inv) % pk;
        if (x < 0) x += pk;
        have = next;
    }
    pk = pow_int(p, static_cast<unsigned long>(N));
    x %= pk;
    if (x < 0) x += pk;
    if (branch == HenselBranch::MinusRoot) x = (pk - x) % pk;
    if (t != 0) x = x * pow_int(p, static_cast<unsigned long>(t)) % pk;
    return x;
}

}  // namespace padiccf
