// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_ELL_HPP
#define QCURVE_ELL_HPP

#include "qcurve/nf.hpp"

namespace qcurve {

struct SingularModel : Error { SingularModel() : Error("discriminant is zero") {} };

// E: y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a number field
class EllipticCurveNF {
public:
    EllipticCurveNF(NFElement a1, NFElement a2, NFElement a3, NFElement a4, NFElement a6);

    const NumberFieldPtr& field() const { return a1_.field(); }
    const NFElement& a1() const { return a1_; }
    const NFElement& a2() const { return a2_; }
    const NFElement& a3() const { return a3_; }
    const NFElement& a4() const { return a4_; }
    const NFElement& a6() const { return a6_; }
    const NFElement& c4() const { return c4_; }
    const NFElement& c6() const { return c6_; }
    const NFElement& discriminant() const { return delta_; }
    const NFElement& j_invariant() const { return j_; }

    // integral-coordinate model with the same j, by (a_i) -> (u^i a_i)
    EllipticCurveNF integralize() const;
    bool is_integral() const;
    // quadratic twist by d (model [0,0,0,-27 d^2 c4, -54 d^3 c6]); same j
    EllipticCurveNF twist(const NFElement& d) const;

    // the standard model with a prescribed j-invariant (j != 0, 1728):
    // y^2 = x^3 - 3j(j-1728) x - 2j(j-1728)^2
    static EllipticCurveNF from_j(const NFElement& j);

private:
    NFElement a1_, a2_, a3_, a4_, a6_;
    NFElement c4_, c6_, delta_, j_;
};

struct ReductionData {
    Int p;
    int slot_index = 0;
    bool good = false;
    Int trace;       // a_p, only meaningful when good
    Int norm;        // N(p) = p^f
    bool supersingular = false;
};

// reduction of an integral model at an unramified slot; good iff v_p(Delta)=0,
// in which case the trace comes from exhaustive point counting
ReductionData reduce_and_trace(const EllipticCurveNF& E, const PrimeSlot& slot,
                               const Int& norm_bound);

// rational primes p where bad reduction is possible for this integral model:
// divisors of Norm(Delta) plus primes dividing disc(g) (always skipped in
// local tests); the list is a superset of the true bad primes
std::vector<Int> bad_prime_superset(const EllipticCurveNF& E, const Int& limit);

} // namespace qcurve

#endif
