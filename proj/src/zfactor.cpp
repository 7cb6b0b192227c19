// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/hensel.hpp"
#include "qcurve/qpoly.hpp"

#include <algorithm>
#include <bitset>

namespace qcurve {

// achievable proper-factor degrees from one local factorization
static std::vector<char> subset_sums(const std::vector<int>& degs, int n) {
    std::vector<char> can(n + 1, 0);
    can[0] = 1;
    for (int d : degs)
        for (int s = n - d; s >= 0; s--)
            if (can[s]) can[s + d] = 1;
    return can;
}

// exact division test over Z: does monic h divide monic f?
static bool divides_exactly(const ZPoly& f, const ZPoly& h) {
    ZPoly r = f;
    int dh = (int)h.size() - 1;
    for (;;) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if ((int)r.size() - 1 < dh) break;
        Int c = r.back();
        int shift = (int)r.size() - 1 - dh;
        for (int i = 0; i <= dh; i++) r[shift + i] -= c * h[i];
    }
    return r.empty();
}

bool is_irreducible_monic(const ZPoly& f) {
    int n = (int)f.size() - 1;
    if (n < 1 || f.back() != 1) throw Error("is_irreducible_monic: monic input required");
    if (n == 1) return true;

    // rational (integer) roots of small absolute value are a cheap first cut
    for (long r : {0L, 1L, -1L}) {
        Int acc = 0;
        for (int i = n; i >= 0; i--) acc = acc * r + f[i];
        if (acc == 0) return false;
    }

    QPoly fq = poly::from_z(f);
    if (poly::degree(poly::gcd(fq, poly::derivative(fq))) > 0) return false; // repeated factor

    // factorization-pattern screen
    std::vector<char> possible(n + 1, 1);
    const Int pz_max = 5000;
    int used = 0;
    uint64_t best_p = 0;
    size_t best_nfac = SIZE_MAX;
    std::vector<FpPoly> best_factors;
    for (uint32_t p : primes_up_to(5000)) {
        if (used >= 25) break;
        FpPoly fbar = zp::to_fp(f, p);
        if (fp::degree(fbar) != n) continue;
        if (fp::degree(fp::gcd(fbar, fp::derivative(fbar, p), p)) != 0) continue;
        auto factors = fp::factor_squarefree(fbar, p);
        used++;
        std::vector<int> degs;
        for (const auto& h : factors) degs.push_back(fp::degree(h));
        auto can = subset_sums(degs, n);
        for (int d = 0; d <= n; d++)
            if (!can[d]) possible[d] = 0;
        bool any_proper = false;
        for (int d = 1; d < n; d++)
            if (possible[d]) any_proper = true;
        if (!any_proper) return true; // proven irreducible
        if (factors.size() < best_nfac) {
            best_nfac = factors.size();
            best_p = p;
            best_factors = factors;
        }
    }
    if (best_p == 0) throw Error("is_irreducible_monic: no usable prime below " + pz_max.get_str());
    if (best_nfac == 1) return true;

    // Zassenhaus: lift the factorization with fewest factors, try subsets
    // Mignotte-style bound on factor coefficients: 2^n * l2norm(f)
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound = (bound + 1) << n;
    Int p = (unsigned long)best_p;
    int steps = 1;
    {
        Int pk = p * p;
        while (pk <= 2 * bound) { pk = pk * pk; steps++; }
    }
    Int pk;
    auto lifted = hensel_lift_factorization(f, p, best_factors, steps, pk);
    size_t t = lifted.size();
    auto sym = [&](Int c) { c %= pk; if (c < 0) c += pk; if (c > pk / 2) c -= pk; return c; };
    for (uint64_t mask = 1; mask + 1 < (1ull << t); mask++) {
        int degsum = 0;
        for (size_t i = 0; i < t; i++)
            if (mask & (1ull << i)) degsum += (int)lifted[i].size() - 1;
        if (degsum == 0 || degsum >= n || !possible[degsum]) continue;
        ZPoly h{1};
        for (size_t i = 0; i < t; i++)
            if (mask & (1ull << i)) h = zp::mul(h, lifted[i], pk);
        bool ok = true;
        for (auto& c : h) {
            c = sym(c);
            if (abs(c) > bound) { ok = false; break; }
        }
        if (!ok) continue;
        if (divides_exactly(f, zp::trim(h))) return false;
    }
    return true;
}

} // namespace qcurve
