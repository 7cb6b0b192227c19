// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/ell.hpp"

namespace qcurve {

EllipticCurveNF::EllipticCurveNF(NFElement a1, NFElement a2, NFElement a3, NFElement a4, NFElement a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    const auto& K = a1_.field();
    auto r = [&](long n) { return NFElement::from_rat(K, Rat(n)); };
    NFElement b2 = a1_ * a1_ + r(4) * a2_;
    NFElement b4 = r(2) * a4_ + a1_ * a3_;
    NFElement b6 = a3_ * a3_ + r(4) * a6_;
    c4_ = b2 * b2 - r(24) * b4;
    c6_ = -(b2 * b2 * b2) + r(36) * b2 * b4 - r(216) * b6;
    // 1728 Delta = c4^3 - c6^2
    delta_ = (c4_ * c4_ * c4_ - c6_ * c6_).scaled(Rat(1, 1728));
    if (delta_.is_zero()) throw SingularModel();
    j_ = c4_ * c4_ * c4_ / delta_;
}

bool EllipticCurveNF::is_integral() const {
    for (const NFElement* a : {&a1_, &a2_, &a3_, &a4_, &a6_})
        if (a->denominator() != 1) return false;
    return true;
}

EllipticCurveNF EllipticCurveNF::integralize() const {
    if (is_integral()) return *this;
    Int u = 1;
    for (const NFElement* a : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
        Int d = a->denominator(), g;
        mpz_lcm(g.get_mpz_t(), u.get_mpz_t(), d.get_mpz_t());
        u = g;
    }
    Rat u1(u), u2 = u1 * u1, u3 = u2 * u1, u4 = u3 * u1, u6 = u4 * u2;
    return EllipticCurveNF(a1_.scaled(u1), a2_.scaled(u2), a3_.scaled(u3),
                           a4_.scaled(u4), a6_.scaled(u6));
}

EllipticCurveNF EllipticCurveNF::twist(const NFElement& d) const {
    const auto& K = a1_.field();
    auto r = [&](long n) { return NFElement::from_rat(K, Rat(n)); };
    NFElement d2 = d * d, d3 = d2 * d;
    return EllipticCurveNF(NFElement::zero(K), NFElement::zero(K), NFElement::zero(K),
                           r(-27) * d2 * c4_, r(-54) * d3 * c6_);
}

EllipticCurveNF EllipticCurveNF::from_j(const NFElement& j) {
    const auto& K = j.field();
    auto r = [&](long n) { return NFElement::from_rat(K, Rat(n)); };
    if (j.is_zero()) // y^2 = x^3 + 1
        return EllipticCurveNF(NFElement::zero(K), NFElement::zero(K), NFElement::zero(K),
                               NFElement::zero(K), NFElement::one(K));
    if (j == r(1728)) // y^2 = x^3 + x
        return EllipticCurveNF(NFElement::zero(K), NFElement::zero(K), NFElement::zero(K),
                               NFElement::one(K), NFElement::zero(K));
    NFElement t = j - r(1728);
    return EllipticCurveNF(NFElement::zero(K), NFElement::zero(K), NFElement::zero(K),
                           r(-3) * j * t, r(-2) * j * t * t);
}

ReductionData reduce_and_trace(const EllipticCurveNF& E, const PrimeSlot& slot,
                               const Int& norm_bound) {
    if (!E.is_integral()) throw Error("reduce_and_trace: integral model required");
    ReductionData rd;
    rd.p = slot.p;
    rd.slot_index = slot.slot_index;
    rd.norm = slot.norm();
    long v = padic_valuation(E.discriminant(), slot);
    if (v < 0) throw Error("reduce_and_trace: negative v(Delta) on integral model (bug)");
    if (v > 0) {
        rd.good = false;
        return rd;
    }
    rd.good = true;
    if (rd.norm > norm_bound) throw FieldTooLarge("reduce_and_trace: norm " + rd.norm.get_str());
    const FqField& F = *slot.field;
    auto pc = count_points(F, slot.reduce(E.a1()), slot.reduce(E.a2()), slot.reduce(E.a3()),
                           slot.reduce(E.a4()), slot.reduce(E.a6()), norm_bound);
    rd.trace = pc.trace;
    rd.supersingular = (pc.trace % slot.p == 0);
    return rd;
}

std::vector<Int> bad_prime_superset(const EllipticCurveNF& E, const Int& limit) {
    Rat nd = E.discriminant().norm();
    Int num = abs(nd.get_num() * nd.get_den());
    std::vector<Int> out;
    Int n = num;
    for (Int d = 2; d <= limit && d * d <= n; d++) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1 && n <= limit) out.push_back(n);
    else if (n > 1 && is_prime(n)) out.push_back(n); // large prime cofactor, keep exact
    return out;
}

} // namespace qcurve
