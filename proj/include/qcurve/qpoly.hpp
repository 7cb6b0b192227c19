// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_QPOLY_HPP
#define QCURVE_QPOLY_HPP

#include "qcurve/numeric.hpp"

namespace qcurve {

// dense univariate polynomials, coefficient of x^i at index i
using QPoly = std::vector<Rat>;
using ZPoly = std::vector<Int>;

namespace poly {

QPoly trim(QPoly f);
int degree(const QPoly& f); // -1 for zero
bool is_zero(const QPoly& f);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rat& c);
// division with remainder, b != 0
void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly monic(const QPoly& f);
QPoly gcd(QPoly a, QPoly b); // monic gcd
QPoly derivative(const QPoly& f);
Rat eval(const QPoly& f, const Rat& x);
// exact resultant over Z by word-prime CRT under the Hadamard bound
Int resultant_z(const ZPoly& a, const ZPoly& b);
Rat resultant(const QPoly& a, const QPoly& b);
// disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f), exact (rational in general)
Rat discriminant(const QPoly& f);

QPoly from_z(const ZPoly& f);
// f must have integer coefficients
ZPoly to_z(const QPoly& f);
bool is_integral(const QPoly& f);
std::string to_string(const QPoly& f, const std::string& var = "x");

} // namespace poly

// exact irreducibility test over Q for a monic integer polynomial:
// factorization-pattern screen over small primes, then a Zassenhaus factor
// search (Hensel lift + subset recombination + exact trial division) when the
// screen is inconclusive
bool is_irreducible_monic(const ZPoly& f);

} // namespace qcurve

#endif
