// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_NUMERIC_HPP
#define QCURVE_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcurve {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

inline Int to_int(const Rat& r) {
    if (r.get_den() != 1) throw Error("to_int: not an integer: " + r.get_str());
    return r.get_num();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// primes up to n by sieve
std::vector<uint32_t> primes_up_to(uint32_t n);

bool is_prime(const Int& n);

// exact v_p(n) for n != 0
long valuation(Int n, const Int& p);
inline long valuation_rat(const Rat& r, const Int& p) {
    if (r == 0) throw Error("valuation of zero");
    long v = 0;
    if (r.get_num() % p == 0) v = valuation(r.get_num(), p);
    if (r.get_den() % p == 0) v -= valuation(r.get_den(), p);
    return v;
}

// squarefree part (with sign) of a nonzero integer; complete trial division,
// adequate for the B2-smooth degree products and the d_p = a^2-4q inputs
Int squarefree_part(Int n);

// Legendre symbol of a mod odd prime ell; every residue counts as a square
// mod 2 (callers rely on this for the ell = 2 case of the sieve)
int square_status_mod(const Int& a, uint32_t ell);

// balanced rational reconstruction: find num/den = u mod m with
// |num|, den <= sqrt(m/2); returns false if none exists
bool rational_reconstruct(const Int& u, const Int& m, Int& num, Int& den);

// incremental CRT: x ≡ r1 mod m1, x ≡ r2 mod m2 (coprime); result mod m1*m2
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

} // namespace qcurve

#endif
