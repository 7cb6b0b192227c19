// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/hensel.hpp"

namespace qcurve {
namespace zp {

ZPoly trim(ZPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int degree(const ZPoly& f) {
    for (int i = (int)f.size() - 1; i >= 0; i--)
        if (f[i] != 0) return i;
    return -1;
}

ZPoly normalize(ZPoly f, const Int& pk) {
    for (auto& c : f) {
        c %= pk;
        if (c < 0) c += pk;
    }
    return trim(std::move(f));
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Int& pk) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    return normalize(std::move(r), pk);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const Int& pk) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    return normalize(std::move(r), pk);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Int& pk) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return normalize(std::move(r), pk);
}

void divrem(const ZPoly& a0, const ZPoly& m, const Int& pk, ZPoly& q, ZPoly& r) {
    int dm = degree(m);
    if (dm < 0 || m[dm] != 1) throw Error("zp::divrem: modulus must be monic");
    r = normalize(ZPoly(a0), pk);
    q.assign(std::max<int>(degree(r) - dm + 1, 0), 0);
    while (degree(r) >= dm) {
        int dr = degree(r);
        Int c = r[dr];
        q[dr - dm] = c;
        for (int i = 0; i <= dm; i++) {
            r[dr - dm + i] -= c * m[i];
        }
        r = normalize(std::move(r), pk);
    }
    q = normalize(std::move(q), pk);
}

ZPoly mod(ZPoly a, const ZPoly& m, const Int& pk) {
    ZPoly q, r;
    divrem(a, m, pk, q, r);
    return r;
}

ZPoly from_fp(const FpPoly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (auto c : f) r.push_back(Int((unsigned long)c));
    return trim(std::move(r));
}

FpPoly to_fp(const ZPoly& f, uint64_t p) {
    FpPoly r;
    r.reserve(f.size());
    Int pz((unsigned long)p);
    for (const auto& c : f) {
        Int m = c % pz;
        if (m < 0) m += pz;
        r.push_back(mpz_get_ui(m.get_mpz_t()));
    }
    return fp::trim(r);
}

} // namespace zp

// one Hensel step (von zur Gathen & Gerhard Alg. 15.10): given f ≡ g*h and
// s*g + t*h ≡ 1 mod m with h monic, produce the same data mod m^2
static void hensel_step(const ZPoly& f, const Int& m, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t) {
    Int m2 = m * m;
    ZPoly e = zp::sub(f, zp::mul(g, h, m2), m2);
    ZPoly q, r;
    zp::divrem(zp::mul(s, e, m2), h, m2, q, r);
    ZPoly g1 = zp::add(g, zp::add(zp::mul(t, e, m2), zp::mul(q, g, m2), m2), m2);
    ZPoly h1 = zp::add(h, r, m2);
    ZPoly b = zp::sub(zp::add(zp::mul(s, g1, m2), zp::mul(t, h1, m2), m2), ZPoly{1}, m2);
    ZPoly c, d;
    zp::divrem(zp::mul(s, b, m2), h1, m2, c, d);
    ZPoly s1 = zp::sub(s, d, m2);
    ZPoly t1 = zp::sub(t, zp::add(zp::mul(t, b, m2), zp::mul(c, g1, m2), m2), m2);
    g = g1; h = h1; s = s1; t = t1;
}

// Bezout s*a + t*b = 1 over F_p for coprime a, b
static void fp_gcdext(const FpPoly& a, const FpPoly& b, uint64_t p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (fp::degree(r1) >= 0) {
        // r0 = q*r1 + r2
        FpPoly q(std::max<int>(fp::degree(r0) - fp::degree(r1) + 1, 0) + 1, 0);
        FpPoly rr = r0;
        uint64_t inv = fp::invm(r1[fp::degree(r1)], p);
        int d1 = fp::degree(r1);
        while (fp::degree(rr) >= d1) {
            int da = fp::degree(rr);
            uint64_t c = fp::mulm(rr[da], inv, p);
            q[da - d1] = c;
            for (int i = 0; i <= d1; i++)
                rr[da - d1 + i] = fp::subm(rr[da - d1 + i], fp::mulm(c, r1[i], p), p);
            rr = fp::trim(rr);
        }
        q = fp::trim(q);
        auto comb = [&](const FpPoly& x0, const FpPoly& x1) {
            FpPoly qs = fp::mul(q, x1, p);
            FpPoly r(std::max(x0.size(), qs.size()), 0);
            for (size_t i = 0; i < x0.size(); i++) r[i] = x0[i];
            for (size_t i = 0; i < qs.size(); i++) r[i] = fp::subm(r[i], qs[i], p);
            return fp::trim(r);
        };
        FpPoly s2 = comb(s0, s1), t2 = comb(t0, t1);
        r0 = r1; r1 = rr;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (fp::degree(r0) != 0) throw Error("fp_gcdext: inputs not coprime");
    uint64_t inv = fp::invm(r0[0], p);
    for (auto& c : s0) c = fp::mulm(c, inv, p);
    for (auto& c : t0) c = fp::mulm(c, inv, p);
    s = s0;
    t = t0;
}

static void lift_pair(const ZPoly& f, const Int& p, const FpPoly& hbar, const FpPoly& gbar,
                      int steps, ZPoly& h_out, ZPoly& g_out, Int& pk_out) {
    uint64_t pu = mpz_get_ui(p.get_mpz_t());
    FpPoly sbar, tbar;
    fp_gcdext(gbar, hbar, pu, sbar, tbar); // s*g + t*h = 1
    ZPoly g = zp::from_fp(gbar), h = zp::from_fp(hbar);
    ZPoly s = zp::from_fp(sbar), t = zp::from_fp(tbar);
    Int m = p;
    for (int i = 0; i < steps; i++) {
        hensel_step(f, m, g, h, s, t);
        m = m * m;
    }
    h_out = h;
    g_out = g;
    pk_out = m;
}

ZPoly hensel_lift_factor(const ZPoly& f, const Int& p, const FpPoly& h_bar,
                         int steps, Int& pk_out) {
    uint64_t pu = mpz_get_ui(p.get_mpz_t());
    FpPoly fbar = zp::to_fp(f, pu);
    // cofactor mod p
    FpPoly gbar;
    {
        FpPoly a = fbar, q;
        int dh = fp::degree(h_bar);
        q.assign(std::max<int>(fp::degree(a) - dh + 1, 0), 0);
        uint64_t inv = fp::invm(h_bar[dh], pu);
        while (fp::degree(a) >= dh) {
            int da = fp::degree(a);
            uint64_t c = fp::mulm(a[da], inv, pu);
            q[da - dh] = c;
            for (int i = 0; i <= dh; i++)
                a[da - dh + i] = fp::subm(a[da - dh + i], fp::mulm(c, h_bar[i], pu), pu);
            a = fp::trim(a);
        }
        if (fp::degree(a) >= 0) throw Error("hensel_lift_factor: h does not divide f mod p");
        gbar = fp::trim(q);
    }
    ZPoly h, g;
    lift_pair(f, p, h_bar, gbar, steps, h, g, pk_out);
    return h;
}

std::vector<ZPoly> hensel_lift_factorization(const ZPoly& f, const Int& p,
                                             const std::vector<FpPoly>& factors_mod_p,
                                             int steps, Int& pk_out) {
    uint64_t pu = mpz_get_ui(p.get_mpz_t());
    std::vector<ZPoly> out;
    if (factors_mod_p.size() == 1) {
        pk_out = p;
        for (int i = 0; i < steps; i++) pk_out = pk_out * pk_out;
        out.push_back(zp::normalize(ZPoly(f), pk_out));
        return out;
    }
    // peel factors one at a time: f = h1 * rest, recurse on rest
    ZPoly cur = f;
    std::vector<FpPoly> remaining = factors_mod_p;
    Int pk = p;
    for (size_t i = 0; i + 1 < factors_mod_p.size(); i++) {
        const FpPoly& hbar = remaining.front();
        FpPoly gbar{1};
        for (size_t j = 1; j < remaining.size(); j++) gbar = fp::mul(gbar, remaining[j], pu);
        // reduce cur mod p to re-derive hbar/gbar consistency
        ZPoly h, g;
        lift_pair(cur, p, hbar, gbar, steps, h, g, pk);
        out.push_back(h);
        cur = g;
        remaining.erase(remaining.begin());
    }
    out.push_back(cur);
    pk_out = pk;
    return out;
}

std::vector<ZPoly> crt_idempotents(const ZPoly& g, const Int& p, const Int& pk,
                                   const std::vector<ZPoly>& lifted) {
    uint64_t pu = mpz_get_ui(p.get_mpz_t());
    std::vector<ZPoly> out;
    for (size_t i = 0; i < lifted.size(); i++) {
        // cofactor C = prod_{j != i} H_j mod pk
        ZPoly C{1};
        for (size_t j = 0; j < lifted.size(); j++)
            if (j != i) C = zp::mul(C, lifted[j], pk);
        // Bezout mod p, then Newton-lift: s*H + t*C = 1
        FpPoly sbar, tbar;
        fp_gcdext(zp::to_fp(lifted[i], pu), zp::to_fp(C, pu), pu, sbar, tbar); // s*H + t*C = 1
        ZPoly s = zp::from_fp(sbar), t = zp::from_fp(tbar);
        Int m = p;
        while (m < pk) {
            Int m2 = m * m;
            if (m2 > pk) m2 = pk; // coefficients only ever read mod pk
            ZPoly b = zp::sub(zp::add(zp::mul(s, lifted[i], m2), zp::mul(t, C, m2), m2), ZPoly{1}, m2);
            s = zp::sub(s, zp::mul(s, b, m2), m2);
            t = zp::sub(t, zp::mul(t, b, m2), m2);
            m = m2;
        }
        ZPoly e = zp::mod(zp::mul(t, C, pk), g, pk);
        out.push_back(e);
    }
    return out;
}

} // namespace qcurve
