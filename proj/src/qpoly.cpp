// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/qpoly.hpp"

#include <sstream>

namespace qcurve {
namespace poly {

QPoly trim(QPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int degree(const QPoly& f) {
    for (int i = (int)f.size() - 1; i >= 0; i--)
        if (f[i] != 0) return i;
    return -1;
}

bool is_zero(const QPoly& f) { return degree(f) < 0; }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    return trim(r);
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    return trim(r);
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return trim(r);
}

QPoly scale(const QPoly& a, const Rat& c) {
    QPoly r = a;
    for (auto& x : r) x *= c;
    return trim(r);
}

void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    int db = degree(b);
    if (db < 0) throw Error("poly division by zero");
    r = trim(a);
    q.assign(std::max<int>(degree(r) - db + 1, 0), Rat(0));
    Rat lb = b[db];
    while (degree(r) >= db) {
        int dr = degree(r);
        Rat c = r[dr] / lb;
        q[dr - db] = c;
        for (int i = 0; i <= db; i++) r[dr - db + i] -= c * b[i];
        r = trim(r);
    }
    q = trim(q);
}

QPoly monic(const QPoly& f) {
    int d = degree(f);
    if (d < 0) return {};
    return scale(f, Rat(1) / f[d]);
}

QPoly gcd(QPoly a, QPoly b) {
    a = trim(a);
    b = trim(b);
    while (!is_zero(b)) {
        QPoly q, r;
        divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return monic(a);
}

QPoly derivative(const QPoly& f) {
    QPoly r;
    for (size_t i = 1; i < f.size(); i++) r.push_back(Rat((long)i) * f[i]);
    return trim(r);
}

Rat eval(const QPoly& f, const Rat& x) {
    Rat acc = 0;
    for (int i = (int)f.size() - 1; i >= 0; i--) acc = acc * x + f[i];
    return acc;
}

// resultant of the mod-p images (degrees must be preserved by reduction)
static uint64_t resultant_mod_p(const ZPoly& A, const ZPoly& B, uint64_t p) {
    auto reduce = [&](const ZPoly& f) {
        std::vector<uint64_t> r;
        Int pz((unsigned long)p);
        for (const auto& c : f) {
            Int m = c % pz;
            if (m < 0) m += pz;
            r.push_back(mpz_get_ui(m.get_mpz_t()));
        }
        return r;
    };
    auto deg = [](const std::vector<uint64_t>& f) {
        for (int i = (int)f.size() - 1; i >= 0; i--)
            if (f[i]) return i;
        return -1;
    };
    auto mulm = [&](uint64_t x, uint64_t y) { return (uint64_t)((__uint128_t)x * y % p); };
    auto powm = [&](uint64_t x, long e) {
        uint64_t r = 1;
        while (e) { if (e & 1) r = mulm(r, x); x = mulm(x, x); e >>= 1; }
        return r;
    };
    std::vector<uint64_t> a = reduce(A), b = reduce(B);
    uint64_t res = 1;
    for (;;) {
        int da = deg(a), db = deg(b);
        if (db < 0) return 0;
        if (db == 0) return mulm(res, powm(b[0], da));
        // a mod b
        uint64_t lb = b[db], linv = powm(lb, (long)p - 2);
        std::vector<uint64_t> r = a;
        while (deg(r) >= db) {
            int dr = deg(r);
            uint64_t c = mulm(r[dr], linv);
            for (int i = 0; i <= db; i++) {
                uint64_t t = mulm(c, b[i]);
                uint64_t& x = r[dr - db + i];
                x = (x >= t) ? x - t : x + p - t;
            }
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        int dr = deg(r);
        res = mulm(res, powm(lb, da - dr));
        if ((da & 1) && (db & 1)) res = res ? p - res : 0;
        a = std::move(b);
        b = std::move(r);
    }
}

Int resultant_z(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = a0, b = b0;
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (!b.empty() && b.back() == 0) b.pop_back();
    if (a.empty() || b.empty()) return 0;
    int da = (int)a.size() - 1, db = (int)b.size() - 1;
    if (da == 0) {
        Int r = 1;
        for (int i = 0; i < db; i++) r *= a[0];
        return r;
    }
    // Hadamard bound: |Res| <= l2(a)^db * l2(b)^da
    Int n2a = 0, n2b = 0;
    for (const auto& c : a) n2a += c * c;
    for (const auto& c : b) n2b += c * c;
    size_t bits = (mpz_sizeinbase(n2a.get_mpz_t(), 2) / 2 + 1) * db +
                  (mpz_sizeinbase(n2b.get_mpz_t(), 2) / 2 + 1) * da + 4;
    // CRT over 62-bit primes not dividing either leading coefficient
    Int res = 0, modulus = 1;
    uint64_t cand = (1ull << 62) - 1;
    size_t have = 0;
    while (have * 61 < bits + 1) {
        Int pz;
        for (;; cand -= 2) {
            pz = (unsigned long)(cand >> 32);
            pz = (pz << 32) + (unsigned long)(cand & 0xffffffffull);
            if (!is_prime(pz)) continue;
            if (a.back() % pz == 0 || b.back() % pz == 0) continue;
            break;
        }
        uint64_t p = cand;
        cand -= 2;
        uint64_t rp = resultant_mod_p(a, b, p);
        Int rz = (unsigned long)(rp >> 32);
        rz = (rz << 32) + (unsigned long)(rp & 0xffffffffull);
        if (modulus == 1) { res = rz; modulus = pz; }
        else {
            res = crt_pair(res, modulus, rz, pz);
            modulus *= pz;
        }
        have++;
    }
    if (res > modulus / 2) res -= modulus;
    return res;
}

Rat resultant(const QPoly& a0, const QPoly& b0) {
    QPoly a = trim(a0), b = trim(b0);
    if (is_zero(a) || is_zero(b)) return 0;
    // clear denominators: Res(la, mb) = l^deg(b) m^deg(a) Res(a, b)
    Int la = 1, mb = 1;
    for (const auto& c : a) {
        Int l;
        mpz_lcm(l.get_mpz_t(), la.get_mpz_t(), c.get_den().get_mpz_t());
        la = l;
    }
    for (const auto& c : b) {
        Int l;
        mpz_lcm(l.get_mpz_t(), mb.get_mpz_t(), c.get_den().get_mpz_t());
        mb = l;
    }
    ZPoly A, B;
    for (const auto& c : a) A.push_back(to_int(Rat(c * Rat(la))));
    for (const auto& c : b) B.push_back(to_int(Rat(c * Rat(mb))));
    Rat scale = 1;
    for (int i = 0; i < degree(b); i++) scale *= Rat(la);
    for (int i = 0; i < degree(a); i++) scale *= Rat(mb);
    return Rat(resultant_z(A, B)) / scale;
}

Rat discriminant(const QPoly& f) {
    int d = degree(f);
    if (d < 1) throw Error("discriminant: degree < 1");
    Rat out = resultant(f, derivative(f)) / f[d];
    if (((long)d * (d - 1) / 2) & 1) out = -out;
    return out;
}

QPoly from_z(const ZPoly& f) {
    QPoly r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(Rat(c));
    return trim(r);
}

ZPoly to_z(const QPoly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(to_int(c));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool is_integral(const QPoly& f) {
    for (const auto& c : f)
        if (!is_integer(c)) return false;
    return true;
}

std::string to_string(const QPoly& f, const std::string& var) {
    if (is_zero(f)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(f); i >= 0; i--) {
        if (f[i] == 0) continue;
        Rat c = f[i];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace poly
} // namespace qcurve
