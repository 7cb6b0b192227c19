// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_NF_HPP
#define QCURVE_NF_HPP

#include "qcurve/fq.hpp"
#include "qcurve/qpoly.hpp"

#include <memory>
#include <optional>

namespace qcurve {

struct NotMonic : Error { NotMonic() : Error("defining polynomial is not monic") {} };
struct Reducible : Error { Reducible() : Error("defining polynomial is reducible over Q") {} };
struct RamifiedOrNonMaximal : Error {
    explicit RamifiedOrNonMaximal(const Int& p) : Error("prime " + p.get_str() + " divides disc(g)") {}
};
struct PrecisionExhausted : Error { PrecisionExhausted() : Error("p-adic precision exhausted") {} };
struct ZeroElement : Error { ZeroElement() : Error("operation undefined for zero element") {} };

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

// K = Q[x]/(g), g monic irreducible in Z[x]; elements in the power basis
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // verifies monicity and irreducibility, computes disc(g)
    static NumberFieldPtr make(const ZPoly& g);

    int degree() const { return n_; }
    const ZPoly& defining_poly() const { return g_; }
    const Int& poly_disc() const { return disc_; }

    // reduce a rational polynomial mod g to degree < n coordinates
    std::vector<Rat> reduce(const QPoly& f) const;

private:
    explicit NumberField(ZPoly g);
    ZPoly g_;
    int n_;
    Int disc_;
};

class NFElement {
public:
    NFElement() = default;
    NFElement(NumberFieldPtr K, std::vector<Rat> coords);
    static NFElement zero(const NumberFieldPtr& K);
    static NFElement one(const NumberFieldPtr& K);
    static NFElement from_rat(const NumberFieldPtr& K, const Rat& r);
    static NFElement gen(const NumberFieldPtr& K); // the class of x

    const NumberFieldPtr& field() const { return K_; }
    const std::vector<Rat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational

    NFElement operator+(const NFElement& o) const;
    NFElement operator-(const NFElement& o) const;
    NFElement operator-() const;
    NFElement operator*(const NFElement& o) const;
    NFElement operator/(const NFElement& o) const;
    NFElement inverse() const;
    NFElement pow(long e) const;
    bool operator==(const NFElement& o) const;
    bool operator!=(const NFElement& o) const { return !(*this == o); }
    // lexicographic on coordinates; used for canonical orderings
    bool operator<(const NFElement& o) const;

    NFElement scaled(const Rat& r) const;
    Rat norm() const;
    Rat trace() const;
    // lcm of coordinate denominators
    Int denominator() const;
    std::string to_string() const;

private:
    NumberFieldPtr K_;
    std::vector<Rat> c_;
};

// monic minimal polynomial over Q, by first linear dependency among powers
QPoly element_minimal_polynomial(const NFElement& a);

// a prime p of K above the rational prime p, for p not dividing disc(g)
struct PrimeSlot {
    Int p;
    int residue_degree;
    int slot_index;
    std::shared_ptr<const FqField> field; // F_p[x]/(h_i)
    FqElement local_root;                 // class of x, a root of g
    FpPoly factor;                        // h_i, the factor of g mod p

    Int norm() const; // p^f
    // reduction map K -> F_{p^f}; denominator of a must be prime to p
    FqElement reduce(const NFElement& a) const;
};

std::vector<PrimeSlot> primes_above(const NumberFieldPtr& K, const Int& p);

// exact v_p(a) at the slot, by Hensel-lifting the slot factor to p^(2^k)
// and reading coefficient valuations; max_doublings caps the escalation
long padic_valuation(const NFElement& a, const PrimeSlot& slot, int max_doublings = 6);

} // namespace qcurve

#endif
