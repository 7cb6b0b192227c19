// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/numeric.hpp"

namespace qcurve {

std::vector<uint32_t> primes_up_to(uint32_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= n; i++) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = (uint64_t)i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long valuation(Int n, const Int& p) {
    if (n == 0) throw Error("valuation of zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        v++;
    }
}

Int squarefree_part(Int n) {
    if (n == 0) throw Error("squarefree_part of zero");
    Int s = (n < 0) ? -1 : 1;
    n = abs(n);
    for (Int d = 2; d * d <= n; d++) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; e++; }
        if (e & 1) s *= d;
    }
    return s * n; // remaining n is 1 or prime
}

int square_status_mod(const Int& a, uint32_t ell) {
    if (ell == 2) return 1;
    Int p = ell;
    return mpz_legendre(Int(a % p).get_mpz_t(), p.get_mpz_t());
}

bool rational_reconstruct(const Int& u, const Int& m, Int& num, Int& den) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = ((u % m) + m) % m;
    Int s0 = 0, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0) return false;
    num = r1;
    den = s1;
    if (den < 0) { den = -den; num = -num; }
    if (den > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    return true;
}

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
        throw Error("crt_pair: moduli not coprime");
    Int t = ((r2 - r1) * inv) % m2;
    if (t < 0) t += m2;
    return r1 + m1 * t;
}

} // namespace qcurve
