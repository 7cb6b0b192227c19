// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/fq.hpp"

#include <algorithm>
#include <cassert>

namespace qcurve {
namespace fp {

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) { uint64_t s = a + b; return s >= p ? s - p : s; }
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return (uint64_t)((__uint128_t)a * b % p); }

uint64_t powm(uint64_t a, const Int& e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; i--) {
        r = mulm(r, r, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulm(r, a, p);
    }
    return r;
}

uint64_t invm(uint64_t a, uint64_t p) {
    if (a % p == 0) throw Error("fp inverse of zero");
    return powm(a, Int((unsigned long)(p - 2)), p);
}

FpPoly trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int degree(const FpPoly& f) {
    for (int i = (int)f.size() - 1; i >= 0; i--)
        if (f[i]) return i;
    return -1;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); j++)
            if (b[j]) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
    return trim(r);
}

FpPoly mod(FpPoly a, const FpPoly& m, uint64_t p) {
    int dm = degree(m);
    if (dm < 0) throw Error("fp poly mod by zero");
    uint64_t inv = invm(m[dm], p);
    a = trim(a);
    while (degree(a) >= dm) {
        int da = degree(a);
        uint64_t c = mulm(a[da], inv, p);
        for (int i = 0; i <= dm; i++)
            a[da - dm + i] = subm(a[da - dm + i], mulm(c, m[i], p), p);
        a = trim(a);
    }
    return a;
}

FpPoly monic(const FpPoly& f, uint64_t p) {
    int d = degree(f);
    if (d < 0) return {};
    uint64_t inv = invm(f[d], p);
    FpPoly r = trim(f);
    for (auto& c : r) c = mulm(c, inv, p);
    return r;
}

FpPoly gcd(FpPoly a, FpPoly b, uint64_t p) {
    a = trim(a);
    b = trim(b);
    while (degree(b) >= 0) {
        FpPoly r = mod(a, b, p);
        a = b;
        b = r;
    }
    return monic(a, p);
}

FpPoly derivative(const FpPoly& f, uint64_t p) {
    FpPoly r;
    for (size_t i = 1; i < f.size(); i++) r.push_back(mulm(f[i], i % p, p));
    return trim(r);
}

static FpPoly powmod(FpPoly base, const Int& e, const FpPoly& m, uint64_t p) {
    FpPoly r{1};
    base = mod(base, m, p);
    for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; i--) {
        r = mod(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base, p), m, p);
    }
    return r;
}

FpPoly pow_x_q(const Int& q, const FpPoly& m, uint64_t p) {
    return powmod(FpPoly{0, 1}, q, m, p);
}

// deterministic enumeration of candidate splitting elements: coefficients of
// the polynomial are the base-p digits of the counter, so every residue class
// mod f is eventually visited and a separating element is always reached
static FpPoly nth_candidate(uint64_t c, uint64_t p) {
    FpPoly e;
    while (c) {
        e.push_back(c % p);
        c /= p;
    }
    return trim(e);
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
static void equal_degree_split(const FpPoly& f, int d, uint64_t p, std::vector<FpPoly>& out) {
    if (degree(f) == d) {
        out.push_back(monic(f, p));
        return;
    }
    auto divide_out = [&](const FpPoly& g) {
        FpPoly q2, a = f;
        int dg = degree(g);
        q2.assign(degree(a) - dg + 1, 0);
        while (degree(a) >= dg) {
            int da = degree(a);
            uint64_t cc = a[da]; // g monic
            q2[da - dg] = cc;
            for (int i = 0; i <= dg; i++)
                a[da - dg + i] = subm(a[da - dg + i], mulm(cc, g[i], p), p);
            a = trim(a);
        }
        equal_degree_split(g, d, p, out);
        equal_degree_split(trim(q2), d, p, out);
    };
    if (p == 2) {
        // trace splitting: gcd with Tr(e) = e + e^2 + ... + e^(2^(d-1))
        for (uint64_t c = 2;; c++) {
            FpPoly cur = mod(nth_candidate(c, p), f, p);
            FpPoly acc = cur;
            for (int i = 1; i < d; i++) {
                cur = mod(mul(cur, cur, p), f, p);
                FpPoly s(std::max(acc.size(), cur.size()), 0);
                for (size_t k = 0; k < acc.size(); k++) s[k] ^= acc[k];
                for (size_t k = 0; k < cur.size(); k++) s[k] ^= cur[k];
                acc = trim(s);
            }
            FpPoly g = gcd(f, acc, p);
            if (degree(g) > 0 && degree(g) < degree(f)) { divide_out(g); return; }
        }
    }
    Int pd = 1;
    for (int i = 0; i < d; i++) pd *= (unsigned long)p;
    Int e = (pd - 1) / 2;
    for (uint64_t c = p;; c++) { // start past the constants
        FpPoly w = powmod(nth_candidate(c, p), e, f, p);
        if (w.empty()) w.push_back(0);
        w[0] = subm(w[0], 1, p);
        FpPoly g = gcd(f, trim(w), p);
        if (degree(g) > 0 && degree(g) < degree(f)) { divide_out(g); return; }
    }
}

std::vector<FpPoly> factor_squarefree(const FpPoly& f0, uint64_t p) {
    FpPoly f = monic(f0, p);
    if (degree(gcd(f, derivative(f, p), p)) != 0)
        throw Error("factor_squarefree: input not squarefree");
    std::vector<FpPoly> out;
    FpPoly xq{0, 1}; // running x^(p^d) mod f
    int d = 0;
    while (degree(f) > 0) {
        d++;
        if (2 * d > degree(f)) {
            out.push_back(f);
            break;
        }
        xq = powmod(xq, Int((unsigned long)p), f, p);
        FpPoly t = xq;
        // t - x
        if (t.size() < 2) t.resize(2, 0);
        t[1] = subm(t[1], 1, p);
        FpPoly g = gcd(f, trim(t), p);
        if (degree(g) > 0) {
            equal_degree_split(g, d, p, out);
            // f /= g
            FpPoly a = f, q2;
            int dg = degree(g);
            q2.assign(degree(a) - dg + 1, 0);
            while (degree(a) >= dg) {
                int da = degree(a);
                uint64_t cc = a[da];
                q2[da - dg] = cc;
                for (int i = 0; i <= dg; i++)
                    a[da - dg + i] = subm(a[da - dg + i], mulm(cc, g[i], p), p);
                a = trim(a);
            }
            f = trim(q2);
            xq = mod(xq, f, p);
        }
    }
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (int i = (int)a.size() - 1; i >= 0; i--)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

} // namespace fp

FqField::FqField(uint64_t p, FpPoly modulus) : p_(p), mod_(fp::monic(std::move(modulus), p)) {
    f_ = fp::degree(mod_);
    if (f_ < 1) throw Error("FqField: modulus must have degree >= 1");
    mod_.resize(f_ + 1);
    q_ = 1;
    for (int i = 0; i < f_; i++) q_ *= (unsigned long)p_;
}

std::vector<uint64_t> FqField::element_rep(uint64_t k) const {
    FpPoly rep(f_, 0);
    for (int i = 0; i < f_; i++) {
        rep[i] = k % p_;
        k /= p_;
    }
    return rep;
}

FqElement::FqElement(const FqField* F, FpPoly rep) : F_(F) {
    rep = fp::mod(std::move(rep), F->modulus(), F->p());
    rep.resize(F->f(), 0);
    rep_ = std::move(rep);
}

FqElement FqElement::zero(const FqField* F) { return FqElement(F, {}); }
FqElement FqElement::one(const FqField* F) { return FqElement(F, {1 % F->p()}); }
FqElement FqElement::from_uint(const FqField* F, uint64_t v) { return FqElement(F, {v % F->p()}); }

bool FqElement::is_zero() const {
    for (auto c : rep_)
        if (c) return false;
    return true;
}

uint64_t FqElement::index() const {
    uint64_t k = 0;
    for (int i = F_->f() - 1; i >= 0; i--) k = k * F_->p() + rep_[i];
    return k;
}

FqElement FqElement::operator+(const FqElement& o) const {
    FpPoly r = rep_;
    for (size_t i = 0; i < r.size(); i++) r[i] = fp::addm(r[i], o.rep_[i], F_->p());
    return FqElement(F_, r);
}

FqElement FqElement::operator-(const FqElement& o) const {
    FpPoly r = rep_;
    for (size_t i = 0; i < r.size(); i++) r[i] = fp::subm(r[i], o.rep_[i], F_->p());
    return FqElement(F_, r);
}

FqElement FqElement::operator-() const {
    FpPoly r = rep_;
    for (auto& c : r) c = c ? F_->p() - c : 0;
    return FqElement(F_, r);
}

FqElement FqElement::operator*(const FqElement& o) const {
    return FqElement(F_, fp::mul(rep_, o.rep_, F_->p()));
}

FqElement FqElement::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    FqElement r = one(F_);
    FqElement b = *this;
    for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; i--) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
    }
    return r;
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw Error("Fq inverse of zero");
    // extended euclid over F_p[x]
    uint64_t p = F_->p();
    FpPoly r0 = F_->modulus(), r1 = fp::trim(rep_);
    FpPoly s0{}, s1{1};
    while (fp::degree(r1) > 0) {
        // r0 = q r1 + r2
        FpPoly q(std::max<int>(fp::degree(r0) - fp::degree(r1) + 1, 0), 0);
        FpPoly a = r0;
        uint64_t inv = fp::invm(r1[fp::degree(r1)], p);
        int d1 = fp::degree(r1);
        while (fp::degree(a) >= d1) {
            int da = fp::degree(a);
            uint64_t c = fp::mulm(a[da], inv, p);
            q[da - d1] = c;
            for (int i = 0; i <= d1; i++)
                a[da - d1 + i] = fp::subm(a[da - d1 + i], fp::mulm(c, r1[i], p), p);
            a = fp::trim(a);
        }
        FpPoly s2 = s0;
        {
            FpPoly qs = fp::mul(fp::trim(q), s1, p);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (size_t i = 0; i < qs.size(); i++) s2[i] = fp::subm(i < s2.size() ? s2[i] : 0, qs[i], p);
            s2 = fp::trim(s2);
        }
        r0 = r1; r1 = a;
        s0 = s1; s1 = s2;
    }
    if (fp::degree(r1) != 0) throw Error("Fq inverse: element not invertible");
    uint64_t inv = fp::invm(r1[0], p);
    for (auto& c : s1) c = fp::mulm(c, inv, p);
    return FqElement(F_, s1);
}

bool FqElement::operator==(const FqElement& o) const {
    return F_ == o.F_ && rep_ == o.rep_;
}

bool FqElement::operator<(const FqElement& o) const {
    for (int i = F_->f() - 1; i >= 0; i--)
        if (rep_[i] != o.rep_[i]) return rep_[i] < o.rep_[i];
    return false;
}

namespace fqp {

FqPoly trim(FqPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int degree(const FqPoly& f) {
    for (int i = (int)f.size() - 1; i >= 0; i--)
        if (!f[i].is_zero()) return i;
    return -1;
}

FqElement eval(const FqPoly& f, const FqElement& x) {
    FqElement acc = FqElement::zero(x.field());
    for (int i = (int)f.size() - 1; i >= 0; i--) acc = acc * x + f[i];
    return acc;
}

FqPoly mul(const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    const FqField* F = a.empty() ? b[0].field() : a[0].field();
    FqPoly r(a.size() + b.size() - 1, FqElement::zero(F));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); j++)
            if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return trim(r);
}

FqPoly mod(FqPoly a, const FqPoly& m) {
    int dm = degree(m);
    if (dm < 0) throw Error("fq poly mod by zero");
    FqElement inv = m[dm].inverse();
    a = trim(a);
    while (degree(a) >= dm) {
        int da = degree(a);
        FqElement c = a[da] * inv;
        for (int i = 0; i <= dm; i++) a[da - dm + i] = a[da - dm + i] - c * m[i];
        a = trim(a);
    }
    return a;
}

FqPoly monic(const FqPoly& f) {
    int d = degree(f);
    if (d < 0) return {};
    FqElement inv = f[d].inverse();
    FqPoly r = trim(f);
    for (auto& c : r) c = c * inv;
    return r;
}

FqPoly gcd(FqPoly a, FqPoly b) {
    a = trim(a);
    b = trim(b);
    while (degree(b) >= 0) {
        FqPoly r = mod(a, b);
        a = b;
        b = r;
    }
    return monic(a);
}

FqPoly derivative(const FqPoly& f) {
    if (f.empty()) return {};
    const FqField* F = f[0].field();
    FqPoly r;
    for (size_t i = 1; i < f.size(); i++)
        r.push_back(FqElement::from_uint(F, i % F->p()) * f[i]);
    return trim(r);
}

static FqPoly powmod(FqPoly base, const Int& e, const FqPoly& m) {
    const FqField* F = m[fqp::degree(m)].field();
    FqPoly r{FqElement::one(F)};
    base = mod(std::move(base), m);
    for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; i--) {
        r = mod(mul(r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
}

} // namespace fqp

static void roots_split(const FqPoly& f, std::vector<FqElement>& out) {
    // f: monic squarefree product of linear factors over F_q, q odd
    const FqField* F = f[0].field();
    int d = fqp::degree(f);
    if (d == 0) return;
    if (d == 1) {
        out.push_back(-f[0]);
        return;
    }
    Int e = (F->q() - 1) / 2;
    uint64_t q = mpz_get_ui(F->q().get_mpz_t());
    for (uint64_t c = 0;; c++) {
        // x + c sweeps the field; past that, quadratic candidates (c base q)
        FqPoly delta;
        for (uint64_t digits = c; ; digits /= q) {
            delta.push_back(FqElement(F, F->element_rep(digits % q)));
            if (digits < q) break;
        }
        delta.push_back(FqElement::one(F));
        FqPoly w = fqp::powmod(delta, e, f);
        if (w.empty()) w.push_back(FqElement::zero(F));
        w[0] = w[0] - FqElement::one(F);
        FqPoly g = fqp::gcd(f, fqp::trim(w));
        int dg = fqp::degree(g);
        if (dg > 0 && dg < d) {
            FqPoly q, a = f;
            q.assign(d - dg + 1, FqElement::zero(F));
            while (fqp::degree(a) >= dg) {
                int da = fqp::degree(a);
                FqElement cc = a[da]; // g monic
                q[da - dg] = cc;
                for (int i = 0; i <= dg; i++) a[da - dg + i] = a[da - dg + i] - cc * g[i];
                a = fqp::trim(a);
            }
            roots_split(g, out);
            roots_split(fqp::trim(q), out);
            return;
        }
    }
}

std::vector<FqElement> poly_roots_fq(const FqPoly& h0) {
    FqPoly h = fqp::trim(h0);
    if (h.empty()) throw Error("poly_roots_fq: zero polynomial");
    const FqField* F = h[0].field();
    std::vector<FqElement> roots;
    if (fqp::degree(h) == 0) return roots;

    bool small = F->q() <= 4096 || F->p() == 2;
    if (small) {
        if (F->q() > (1 << 22)) throw FieldTooLarge("root scan");
        uint64_t q = mpz_get_ui(F->q().get_mpz_t());
        for (uint64_t k = 0; k < q; k++) {
            FqElement x(F, F->element_rep(k));
            if (fqp::eval(h, x).is_zero()) roots.push_back(x);
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // gcd with x^q - x isolates the distinct roots
    FqPoly xq = fqp::powmod(FqPoly{FqElement::zero(F), FqElement::one(F)}, F->q(), h);
    if (xq.size() < 2) xq.resize(2, FqElement::zero(F));
    xq[1] = xq[1] - FqElement::one(F);
    FqPoly g = fqp::gcd(h, fqp::trim(xq));
    if (fqp::degree(g) > 0) roots_split(g, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

PointCount count_points(const FqField& F, const FqElement& a1, const FqElement& a2,
                        const FqElement& a3, const FqElement& a4, const FqElement& a6,
                        const Int& norm_bound) {
    if (F.q() > norm_bound) throw FieldTooLarge("count_points: norm " + F.q().get_str());

    // singularity check over F_q
    FqElement b2 = a1 * a1 + a2 + a2 + a2 + a2;
    FqElement b4 = a4 + a4 + a1 * a3;
    FqElement b6 = a3 * a3 + a6 + a6 + a6 + a6;
    FqElement b8 = b2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    {
        FqElement d1 = b2 * b2 * b8, d2 = b4 * b4 * b4, d3 = b4 * b6 * b2, d4 = b6 * b6;
        // disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        FqElement disc = -d1 - (d2 + d2 + d2 + d2 + d2 + d2 + d2 + d2) + d3 * FqElement::from_uint(&F, 9) - d4 * FqElement::from_uint(&F, 27);
        if (disc.is_zero()) throw SingularCurve();
    }

    Int count = 1; // infinity
    uint64_t q = mpz_get_ui(F.q().get_mpz_t());
    if (F.p() == 2 || F.p() == 3) {
        if (F.q() > 4096) throw FieldTooLarge("coordinate scan in char 2/3");
        for (uint64_t kx = 0; kx < q; kx++) {
            FqElement x(&F, F.element_rep(kx));
            FqElement rhs = ((x + a2) * x + a4) * x + a6;
            FqElement lin = a1 * x + a3;
            for (uint64_t ky = 0; ky < q; ky++) {
                FqElement y(&F, F.element_rep(ky));
                if ((y * y + lin * y - rhs).is_zero()) count++;
            }
        }
    } else if (F.f() == 1) {
        // prime-field fast path, raw residues
        uint64_t p = F.p();
        uint64_t v1 = a1.rep()[0], v2 = a2.rep()[0], v3 = a3.rep()[0],
                 v4 = a4.rep()[0], v6 = a6.rep()[0];
        std::vector<uint8_t> sq(p, 0);
        for (uint64_t y = 0; y < p; y++) sq[fp::mulm(y, y, p)]++;
        long acc = 0;
        for (uint64_t x = 0; x < p; x++) {
            uint64_t fx = fp::addm(fp::mulm(fp::addm(fp::mulm(fp::addm(x, v2, p), x, p), v4, p), x, p), v6, p);
            uint64_t lin = fp::addm(fp::mulm(v1, x, p), v3, p);
            uint64_t g = fp::addm(fp::mulm(lin, lin, p), fp::mulm(4 % p, fx, p), p);
            acc += sq[g];
        }
        count += acc;
    } else {
        // complete the square: (2y + a1 x + a3)^2 = (a1 x + a3)^2 + 4 f(x);
        // flat fixed-buffer arithmetic, the scan is the hot path of the
        // good-prime sweep
        constexpr int FMAX = 16;
        int f = F.f();
        if (f > FMAX) throw FieldTooLarge("extension degree");
        uint64_t p = F.p();
        const auto& md = F.modulus();
        uint64_t c1[FMAX], c2[FMAX], c3[FMAX], c4v[FMAX], c6v[FMAX];
        for (int i = 0; i < f; i++) {
            c1[i] = a1.rep()[i]; c2[i] = a2.rep()[i]; c3[i] = a3.rep()[i];
            c4v[i] = a4.rep()[i]; c6v[i] = a6.rep()[i];
        }
        auto mul = [&](const uint64_t* a, const uint64_t* b, uint64_t* out) {
            uint64_t t[2 * FMAX - 1] = {0};
            for (int i = 0; i < f; i++) {
                if (!a[i]) continue;
                for (int j = 0; j < f; j++)
                    if (b[j]) t[i + j] = (t[i + j] + (uint64_t)((__uint128_t)a[i] * b[j] % p)) % p;
            }
            for (int i = 2 * f - 2; i >= f; i--) {
                uint64_t c = t[i];
                if (!c) continue;
                for (int k = 0; k < f; k++)
                    if (md[k]) t[i - f + k] = (t[i - f + k] + p - (uint64_t)((__uint128_t)c * md[k] % p)) % p;
                t[i] = 0;
            }
            for (int i = 0; i < f; i++) out[i] = t[i];
        };
        auto addv = [&](const uint64_t* a, const uint64_t* b, uint64_t* out) {
            for (int i = 0; i < f; i++) out[i] = fp::addm(a[i], b[i], p);
        };
        auto pack = [&](const uint64_t* a) {
            uint64_t k = 0;
            for (int i = f - 1; i >= 0; i--) k = k * p + a[i];
            return k;
        };
        auto advance = [&](uint64_t* digits) {
            for (int i = 0; i < f; i++) {
                if (++digits[i] < p) return true;
                digits[i] = 0;
            }
            return false;
        };
        std::vector<uint8_t> sq(q, 0);
        {
            uint64_t y[FMAX] = {0}, y2[FMAX];
            do {
                mul(y, y, y2);
                sq[pack(y2)]++;
            } while (advance(y));
        }
        long acc = 0;
        {
            uint64_t x[FMAX] = {0}, t[FMAX], fx[FMAX], lin[FMAX], g[FMAX];
            do {
                addv(x, c2, t);
                mul(t, x, fx);
                addv(fx, c4v, fx);
                mul(fx, x, fx);
                addv(fx, c6v, fx);       // fx = ((x+a2)x + a4)x + a6
                mul(c1, x, lin);
                addv(lin, c3, lin);      // lin = a1 x + a3
                mul(lin, lin, g);
                for (int i = 0; i < f; i++) {
                    uint64_t fourfx = (uint64_t)((__uint128_t)(4 % p) * fx[i] % p);
                    g[i] = fp::addm(g[i], fourfx, p);
                }
                acc += sq[pack(g)];
            } while (advance(x));
        }
        count += acc;
    }
    PointCount pc;
    pc.order = count;
    pc.trace = F.q() + 1 - count;
    if (pc.trace * pc.trace > 4 * F.q()) throw Error("Hasse bound violated (internal)");
    return pc;
}

} // namespace qcurve
