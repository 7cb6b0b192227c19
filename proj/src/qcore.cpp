// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/qcore.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace qcurve {

SquareClass pairwise_degree_class(const IsogenyClassGraph& G, int u, int v) {
    if (u == v) return SquareClass();
    std::vector<SquareClass> cls(G.vertices.size());
    std::vector<char> seen(G.vertices.size(), 0);
    std::deque<int> q{u};
    seen[u] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (const auto& [x, y, ell] : G.edges) {
            int b = -1;
            if (x == a) b = y;
            else if (y == a) b = x;
            else continue;
            if (seen[b]) continue;
            seen[b] = 1;
            cls[b] = cls[a] * SquareClass(Int(ell));
            if (b == v) return cls[b];
            q.push_back(b);
        }
    }
    throw Disconnected();
}

std::vector<ConjugacyGroup> conjugacy_partition(const IsogenyClassGraph& G) {
    std::vector<ConjugacyGroup> groups;
    for (size_t i = 0; i < G.vertices.size(); i++) {
        const QPoly& m = G.min_polys[i];
        bool placed = false;
        for (auto& g : groups) {
            if (g.min_poly == m) {
                g.vertices.push_back((int)i);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({m, {(int)i}, false});
    }
    for (auto& g : groups)
        g.complete = ((int)g.vertices.size() == poly::degree(g.min_poly));
    return groups;
}

Certificate Certificate::cm(const Int& D) {
    Certificate c;
    c.kind = CM;
    c.cm_disc = D;
    c.central_poly = {};
    return c;
}

Certificate Certificate::rational_j(const Rat& j) {
    Certificate c;
    c.kind = NonCM;
    c.r = 0;
    c.rho = 0;
    c.level = 1;
    c.central_poly = {Rat(-j), Rat(1)};
    return c;
}

static bool is_two_power(int d, int& log2_out) {
    if (d < 1) return false;
    int k = 0;
    while (!(d & 1)) { d >>= 1; k++; }
    log2_out = k;
    return d == 1;
}

static std::vector<Int> prime_factors_of_squarefree(Int n) {
    std::vector<Int> out;
    for (Int d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Certificate certificate_from_graph(const IsogenyClassGraph& G) {
    auto groups = conjugacy_partition(G);
    const ConjugacyGroup* best = nullptr;
    int best_rho = 0;
    for (const auto& g : groups) {
        if (!g.complete) continue;
        int d = poly::degree(g.min_poly), k;
        if (!is_two_power(d, k)) continue;
        if (best) {
            int bd = poly::degree(best->min_poly);
            if (d > bd) continue;
            if (d == bd) {
                // deterministic tie-break: lexicographically smaller coefficients
                if (!std::lexicographical_compare(g.min_poly.begin(), g.min_poly.end(),
                                                  best->min_poly.begin(), best->min_poly.end()))
                    continue;
            }
        }
        best = &g;
        best_rho = k;
    }
    if (!best) throw NoCentralClassFound();

    Certificate cert;
    cert.kind = Certificate::NonCM;
    cert.rho = best_rho;
    cert.central_poly = best->min_poly;
    cert.central_vertices = best->vertices;
    // level: lcm of the pairwise square-class degrees inside the class
    Int N = 1;
    for (size_t i = 0; i < best->vertices.size(); i++)
        for (size_t k2 = i + 1; k2 < best->vertices.size(); k2++) {
            Int rep = pairwise_degree_class(G, best->vertices[i], best->vertices[k2]).rep();
            Int g2;
            mpz_lcm(g2.get_mpz_t(), N.get_mpz_t(), rep.get_mpz_t());
            N = g2;
        }
    cert.level = N;
    cert.r = (int)prime_factors_of_squarefree(N).size();
    // rationality chain: r = 0 <=> rho = 0 <=> N = 1 <=> H linear (rational root)
    bool z_r = (cert.r == 0), z_rho = (cert.rho == 0), z_N = (cert.level == 1),
         z_H = (poly::degree(cert.central_poly) == 1);
    if (z_r != z_rho || z_rho != z_N || z_N != z_H)
        throw PropertyViolation("r=0 <=> rho=0 <=> N=1 <=> deg H=1 chain");
    if (cert.rho > cert.r) throw PropertyViolation("rho <= r");
    return cert;
}

PropertyReport verify_core_properties(const IsogenyClassGraph& G, const Certificate& cert) {
    if (cert.kind != Certificate::NonCM)
        throw Error("verify_core_properties: NonCM certificate required");
    PropertyReport rep;
    const auto& C = cert.central_vertices;
    if (C.empty()) throw PropertyViolation("empty central class");
    int c0 = C[0];

    // (i) square classes from c0 across the central class: distinct, divide N,
    // exactly 2^rho of them
    std::vector<SquareClass> from_c0;
    for (int v : C) from_c0.push_back(pairwise_degree_class(G, c0, v));
    std::vector<Int> reps;
    for (const auto& s : from_c0) reps.push_back(s.rep());
    std::sort(reps.begin(), reps.end());
    rep.degree_set = reps;
    if (std::adjacent_find(reps.begin(), reps.end()) != reps.end())
        throw PropertyViolation("central degree classes not distinct");
    if ((long)reps.size() != (1L << cert.rho))
        throw PropertyViolation("central degree set size != 2^rho");
    for (const auto& r2 : reps)
        if (cert.level % r2 != 0)
            throw PropertyViolation("central degree class does not divide the level");

    // (ii) subgroup closure under multiplication modulo squares
    rep.subgroup = true;
    for (size_t i = 0; i < from_c0.size(); i++)
        for (size_t j = 0; j < from_c0.size(); j++) {
            SquareClass prod = from_c0[i] * from_c0[j];
            if (!std::binary_search(reps.begin(), reps.end(), prod.rep())) {
                rep.subgroup = false;
                throw PropertyViolation("central degree set not closed under products");
            }
        }

    // pairwise degrees within the central class are squarefree divisors of N
    for (size_t i = 0; i < C.size(); i++)
        for (size_t j = i + 1; j < C.size(); j++) {
            Int d = pairwise_degree_class(G, C[i], C[j]).rep();
            if (cert.level % d != 0)
                throw PropertyViolation("pairwise central degree does not divide the level");
        }

    // (iii) full core: every divisor of N realized as a class from c0
    {
        auto primes = prime_factors_of_squarefree(cert.level);
        size_t r = primes.size();
        std::vector<Int> all_classes;
        for (size_t v = 0; v < G.vertices.size(); v++)
            all_classes.push_back(pairwise_degree_class(G, c0, (int)v).rep());
        std::sort(all_classes.begin(), all_classes.end());
        rep.full_core = true;
        for (uint64_t mask = 0; mask < (1ull << r); mask++) {
            Int d = 1;
            for (size_t i = 0; i < r; i++)
                if (mask & (1ull << i)) d *= primes[i];
            if (!std::binary_search(all_classes.begin(), all_classes.end(), d)) {
                rep.full_core = false;
                break;
            }
        }
    }

    // (iv) homomorphism consistency on the central class
    for (size_t i = 0; i < C.size(); i++)
        for (size_t j = 0; j < C.size(); j++) {
            SquareClass lhs = pairwise_degree_class(G, C[i], C[j]);
            SquareClass rhs = from_c0[i] * from_c0[j];
            if (lhs != rhs)
                throw PropertyViolation("delta map not a homomorphism image");
        }

    // 2^rho divides the degree of every vertex's minimal polynomial
    for (const auto& m : G.min_polys)
        if (poly::degree(m) % (1L << cert.rho) != 0)
            throw PropertyViolation("2^rho does not divide a vertex degree");

    // smallest-degree upper bound for the distance to the central class,
    // square factors retained (path product, not the exact cyclic degree)
    {
        Int best = -1;
        std::vector<Int> prod(G.vertices.size(), Int(-1));
        std::deque<int> q{G.origin};
        prod[G.origin] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (const auto& [x, y, ell] : G.edges) {
                int b = -1;
                if (x == a) b = y;
                else if (y == a) b = x;
                else continue;
                if (prod[b] != -1) continue;
                prod[b] = prod[a] * ell;
                q.push_back(b);
            }
        }
        for (int v : C)
            if (prod[v] > 0 && (best < 0 || prod[v] < best)) best = prod[v];
        rep.min_central_degree_upper = best;
    }
    rep.ok = true;
    return rep;
}

} // namespace qcurve
