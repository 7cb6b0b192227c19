// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_QCORE_HPP
#define QCURVE_QCORE_HPP

#include "qcurve/isogclass.hpp"

namespace qcurve {

struct Disconnected : Error { Disconnected() : Error("vertices not connected in graph") {} };
struct NoCentralClassFound : Error { NoCentralClassFound() : Error("no complete 2-power conjugacy class") {} };
struct PropertyViolation : Error {
    explicit PropertyViolation(const std::string& clause) : Error("core property violated: " + clause) {}
};

// element of Q^*/(Q^*)^2 arising from positive isogeny degrees
class SquareClass {
public:
    SquareClass() : rep_(1) {}
    explicit SquareClass(const Int& n) : rep_(squarefree_part(n)) {
        if (n <= 0) throw Error("square class of non-positive integer");
    }
    const Int& rep() const { return rep_; }
    SquareClass operator*(const SquareClass& o) const {
        SquareClass r;
        r.rep_ = squarefree_part(rep_ * o.rep_);
        return r;
    }
    bool operator==(const SquareClass& o) const { return rep_ == o.rep_; }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    bool operator<(const SquareClass& o) const { return rep_ < o.rep_; }

private:
    Int rep_;
};

inline SquareClass square_class(const Int& n) { return SquareClass(n); }

// product of edge labels along any path from u to v, modulo squares;
// path-independent by the square-class composition law
SquareClass pairwise_degree_class(const IsogenyClassGraph& G, int u, int v);

struct ConjugacyGroup {
    QPoly min_poly;
    std::vector<int> vertices;
    bool complete = false; // size equals the polynomial degree
};

// vertices grouped by minimal polynomial; a group is complete when it holds
// a full set of Galois conjugates
std::vector<ConjugacyGroup> conjugacy_partition(const IsogenyClassGraph& G);

struct Certificate {
    enum Kind { CM, NonCM } kind = NonCM;
    Int cm_disc;       // kind == CM
    int r = 0;         // number of prime factors of the level
    int rho = 0;       // log2 of the central-class size
    Int level = 1;     // squarefree
    QPoly central_poly; // monic irreducible, degree 2^rho
    std::vector<int> central_vertices; // indices into the graph (NonCM via graph)

    static Certificate cm(const Int& D);
    static Certificate rational_j(const Rat& j);
};

// select a complete conjugacy class of minimal 2-power degree as the central
// class and assemble (r, rho, N, H)
Certificate certificate_from_graph(const IsogenyClassGraph& G);

struct PropertyReport {
    bool ok = true;
    std::string failed_clause;
    std::vector<Int> degree_set;    // square classes from a central vertex
    bool subgroup = false;          // degree set is a subgroup of divisors of N
    bool full_core = false;         // every divisor of N realized in the graph
    Int min_central_degree_upper;   // path product to the central class, squares kept
};

// check the structural consequences of the core theory on a computed graph;
// throws PropertyViolation (an upstream bug, not a math failure) when a
// mandatory clause fails
PropertyReport verify_core_properties(const IsogenyClassGraph& G, const Certificate& cert);

} // namespace qcurve

#endif
