// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_ISOGCLASS_HPP
#define QCURVE_ISOGCLASS_HPP

#include "qcurve/ell.hpp"
#include "qcurve/modpoly.hpp"

#include <map>
#include <set>

namespace qcurve {

// polynomials over a number field, coefficient of X^i at index i
using NFPoly = std::vector<NFElement>;

namespace nfp {
NFPoly trim(NFPoly f);
int degree(const NFPoly& f);
NFElement eval(const NFPoly& f, const NFElement& x);
NFPoly mul(const NFPoly& a, const NFPoly& b);
void divrem(const NFPoly& a, const NFPoly& b, NFPoly& q, NFPoly& r);
NFPoly monic(const NFPoly& f);
NFPoly gcd(NFPoly a, NFPoly b);
NFPoly derivative(const NFPoly& f);
} // namespace nfp

// per-prime local data shared by the sieve and the good-prime test
struct LocalScan {
    // p -> reductions at every slot (all good, all norms within bound)
    std::map<Int, std::vector<ReductionData>> by_prime;
};
LocalScan local_scan(const EllipticCurveNF& E_integral, long B1, const Int& norm_bound);

// primes ell <= B2 not eliminated by the quadratic-residue sieve on
// d_p = a_p^2 - 4 N(p); a superset of the true reducible primes <= B2
std::set<long> heuristic_reducible_primes(const LocalScan& scan, long B2);
std::set<long> heuristic_reducible_primes(const EllipticCurveNF& E, long B1, long B2,
                                          const Int& norm_bound);

struct RootsResult {
    std::vector<NFElement> roots; // exactly verified, canonically sorted
    // true when the returned set is provably all of the K-roots (certified
    // height bound over Q, every lift candidate verified, or an empty slot)
    bool complete = false;
};

// roots in K of a monic polynomial over K, by slot-wise root lifting modulo
// p^(2^k), CRT across the slot factors, rational reconstruction at escalating
// precision, and exact verification of every candidate
RootsResult roots_in_K(const NFPoly& f);

struct IsogenyClassGraph {
    std::vector<NFElement> vertices;
    std::vector<std::tuple<int, int, long>> edges; // (u, v, ell), u < v
    std::vector<QPoly> min_polys;
    int origin = 0;
    bool truncated = false;         // max_vertices hit
    bool roots_complete = true;     // all root searches certified complete
    std::set<long> missing_levels;  // ells with no modular polynomial data

    bool has_edge(int u, int v, long ell) const;
    std::vector<int> neighbors(int u) const;
    int vertex_index(const NFElement& j) const; // -1 if absent
};

// breadth-first closure of { j0 } under ell-isogeny for the sieved ells
IsogenyClassGraph build_class_graph(const NFElement& j0, const std::set<long>& ells,
                                    const ModPolyDB& db, int max_vertices);

} // namespace qcurve

#endif
