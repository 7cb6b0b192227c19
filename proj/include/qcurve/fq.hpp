// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_FQ_HPP
#define QCURVE_FQ_HPP

#include "qcurve/numeric.hpp"

#include <memory>

namespace qcurve {

struct SingularCurve : Error { SingularCurve() : Error("singular curve") {} };
struct FieldTooLarge : Error { explicit FieldTooLarge(const std::string& m) : Error("field too large: " + m) {} };

// polynomials over F_p, coefficient of x^i at index i, values in [0, p)
using FpPoly = std::vector<uint64_t>;

namespace fp {
uint64_t addm(uint64_t a, uint64_t b, uint64_t p);
uint64_t subm(uint64_t a, uint64_t b, uint64_t p);
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p);
uint64_t powm(uint64_t a, const Int& e, uint64_t p);
uint64_t invm(uint64_t a, uint64_t p);

FpPoly trim(FpPoly f);
int degree(const FpPoly& f);
FpPoly mul(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly mod(FpPoly a, const FpPoly& m, uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, uint64_t p); // monic
FpPoly monic(const FpPoly& f, uint64_t p);
FpPoly derivative(const FpPoly& f, uint64_t p);
// x^(p^k) mod m via repeated frobenius powering
FpPoly pow_x_q(const Int& q, const FpPoly& m, uint64_t p);
// distinct irreducible factors of a squarefree f, sorted by (degree, coeffs)
std::vector<FpPoly> factor_squarefree(const FpPoly& f, uint64_t p);
} // namespace fp

class FqField {
public:
    FqField(uint64_t p, FpPoly modulus);
    uint64_t p() const { return p_; }
    int f() const { return f_; }
    const FpPoly& modulus() const { return mod_; }
    const Int& q() const { return q_; }
    // element with given residue index, 0 <= k < q (base-p digits, low first)
    std::vector<uint64_t> element_rep(uint64_t k) const;

private:
    uint64_t p_;
    int f_;
    FpPoly mod_;
    Int q_;
};

class FqElement {
public:
    FqElement() : F_(nullptr) {}
    FqElement(const FqField* F, FpPoly rep);
    static FqElement zero(const FqField* F);
    static FqElement one(const FqField* F);
    static FqElement from_uint(const FqField* F, uint64_t v);

    const FqField* field() const { return F_; }
    const FpPoly& rep() const { return rep_; }
    bool is_zero() const;
    uint64_t index() const; // sum rep[i] p^i

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator*(const FqElement& o) const;
    FqElement operator-() const;
    FqElement inverse() const;
    FqElement pow(const Int& e) const;
    bool operator==(const FqElement& o) const;
    bool operator!=(const FqElement& o) const { return !(*this == o); }
    bool operator<(const FqElement& o) const; // lexicographic on rep

private:
    const FqField* F_;
    FpPoly rep_; // reduced, size f, low coefficient first
};

using FqPoly = std::vector<FqElement>;

namespace fqp {
FqPoly trim(FqPoly f);
int degree(const FqPoly& f);
FqElement eval(const FqPoly& f, const FqElement& x);
FqPoly mul(const FqPoly& a, const FqPoly& b);
FqPoly mod(FqPoly a, const FqPoly& m);
FqPoly gcd(FqPoly a, FqPoly b); // monic
FqPoly monic(const FqPoly& f);
FqPoly derivative(const FqPoly& f);
} // namespace fqp

// all distinct roots of a nonzero polynomial over its field, sorted;
// exhaustive scan for q <= 4096 or char 2, gcd with X^q - X plus
// deterministic equal-degree splitting otherwise
std::vector<FqElement> poly_roots_fq(const FqPoly& h);

struct PointCount {
    Int order;
    Int trace;
};

// #E(F_q) for a long Weierstrass model [a1,a2,a3,a4,a6]; nonsingularity is
// checked; char 2 and 3 enumerate both coordinates (guarded), other
// characteristics count quadratic-character solutions via a squares table
PointCount count_points(const FqField& F, const FqElement& a1, const FqElement& a2,
                        const FqElement& a3, const FqElement& a4, const FqElement& a6,
                        const Int& norm_bound);

} // namespace qcurve

#endif
