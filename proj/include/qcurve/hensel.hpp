// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_HENSEL_HPP
#define QCURVE_HENSEL_HPP

#include "qcurve/fq.hpp"
#include "qcurve/qpoly.hpp"

namespace qcurve {

// arithmetic on ZPoly viewed mod p^k (coefficients normalized to [0, pk))
namespace zp {
ZPoly trim(ZPoly f);
int degree(const ZPoly& f);
ZPoly normalize(ZPoly f, const Int& pk);
ZPoly add(const ZPoly& a, const ZPoly& b, const Int& pk);
ZPoly sub(const ZPoly& a, const ZPoly& b, const Int& pk);
ZPoly mul(const ZPoly& a, const ZPoly& b, const Int& pk);
// remainder of a by monic m, all mod pk
ZPoly mod(ZPoly a, const ZPoly& m, const Int& pk);
// quotient of a by monic m, all mod pk
void divrem(const ZPoly& a, const ZPoly& m, const Int& pk, ZPoly& q, ZPoly& r);
ZPoly from_fp(const FpPoly& f);
FpPoly to_fp(const ZPoly& f, uint64_t p);
} // namespace zp

// quadratic Hensel lift of the full factorization of a monic f that is
// squarefree mod p: f ≡ prod factors (mod p^(2^steps)); factors returned
// monic mod p^(2^steps), same order as the input
std::vector<ZPoly> hensel_lift_factorization(const ZPoly& f, const Int& p,
                                             const std::vector<FpPoly>& factors_mod_p,
                                             int steps, Int& pk_out);

// lift the single factor h_bar of f (monic, squarefree mod p) to mod p^(2^steps)
ZPoly hensel_lift_factor(const ZPoly& f, const Int& p, const FpPoly& h_bar,
                         int steps, Int& pk_out);

// CRT idempotents for a lifted factorization of monic g mod pk:
// e_i ≡ 1 mod H_i, e_i ≡ 0 mod H_j (j != i), computed mod (pk, g)
std::vector<ZPoly> crt_idempotents(const ZPoly& g, const Int& p, const Int& pk,
                                   const std::vector<ZPoly>& lifted);

} // namespace qcurve

#endif
