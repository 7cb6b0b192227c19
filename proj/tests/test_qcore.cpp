// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include "qcurve/qcore.hpp"

#include <random>

using namespace qcurve;

static const ModPolyDB& db() {
    static ModPolyDB d(std::string(QCURVE_DATA_DIR) + "/modpoly");
    return d;
}

static IsogenyClassGraph strict_graph() {
    auto K = NumberField::make({-2, 0, 1});
    NFElement j(K, {Rat(60992), Rat(-43136)});
    return build_class_graph(j, {2}, db(), 128);
}

static IsogenyClassGraph quartic_graph() {
    auto K = NumberField::make({121, 0, -30, 0, 1});
    NFElement j(K, {Rat(74099136), Rat(162381056, 11), Rat(-15431040), Rat(-33814784, 11)});
    return build_class_graph(j, {3, 5}, db(), 128);
}

static IsogenyClassGraph rational_graph() {
    auto K = NumberField::make({0, 1});
    EllipticCurveNF E(NFElement::one(K), NFElement::zero(K), NFElement::one(K),
                      NFElement::from_rat(K, 4), NFElement::from_rat(K, -6));
    return build_class_graph(E.j_invariant(), {2, 3}, db(), 128);
}

TEST_CASE("square_class basics") {
    CHECK(square_class(18).rep() == 2);
    CHECK(square_class(1).rep() == 1);
    CHECK(square_class(15).rep() == 15);
    CHECK((square_class(3) * square_class(3)).rep() == 1);
    CHECK((square_class(9) * square_class(2)).rep() == 2);
}

TEST_CASE("pairwise_degree_class") {
    auto G = strict_graph();
    CHECK(pairwise_degree_class(G, 0, 0).rep() == 1);
    CHECK(pairwise_degree_class(G, 0, 1).rep() == 2);

    // disconnected pair raises
    IsogenyClassGraph H = G;
    H.edges.clear();
    CHECK_THROWS_AS(pairwise_degree_class(H, 0, 1), Disconnected);
}

TEST_CASE("path independence and homomorphism law on the 14.a class") {
    auto G = rational_graph();
    REQUIRE(G.vertices.size() == 6);
    std::mt19937 rng(31415);
    for (int t = 0; t < 500; t++) {
        int u = rng() % 6, v = rng() % 6, w = rng() % 6;
        auto uv = pairwise_degree_class(G, u, v);
        auto vw = pairwise_degree_class(G, v, w);
        auto uw = pairwise_degree_class(G, u, w);
        CHECK(uw == uv * vw);
    }
    // degrees divide 18 modulo squares: square classes land in {1,2,3,6}
    for (int u = 0; u < 6; u++)
        for (int v = 0; v < 6; v++) {
            Int r = pairwise_degree_class(G, u, v).rep();
            CHECK((r == 1 || r == 2 || r == 3 || r == 6));
        }
}

TEST_CASE("conjugacy_partition") {
    auto G = strict_graph();
    auto groups = conjugacy_partition(G);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].complete);
    CHECK(groups[0].vertices.size() == 2);

    auto Gq = quartic_graph();
    auto gq = conjugacy_partition(Gq);
    REQUIRE(gq.size() == 1);
    CHECK(gq[0].complete);
    CHECK(gq[0].vertices.size() == 4);

    auto Gr = rational_graph();
    auto gr = conjugacy_partition(Gr);
    CHECK(gr.size() == 6); // six rational vertices, all complete
    for (const auto& g : gr) CHECK(g.complete);
}

TEST_CASE("certificate: strict quadratic example") {
    auto G = strict_graph();
    auto cert = certificate_from_graph(G);
    CHECK(cert.kind == Certificate::NonCM);
    CHECK(cert.r == 1);
    CHECK(cert.rho == 1);
    CHECK(cert.level == 2);
    CHECK(cert.central_poly == QPoly{Rat(-1404928), Rat(-121984), Rat(1)});

    auto rep = verify_core_properties(G, cert);
    CHECK(rep.ok);
    CHECK(rep.degree_set == std::vector<Int>{1, 2});
    CHECK(rep.full_core);
}

TEST_CASE("certificate: quartic core with level 15") {
    auto G = quartic_graph();
    auto cert = certificate_from_graph(G);
    CHECK(cert.r == 2);
    CHECK(cert.rho == 2);
    CHECK(cert.level == 15);
    CHECK(poly::degree(cert.central_poly) == 4);

    auto rep = verify_core_properties(G, cert);
    CHECK(rep.degree_set == std::vector<Int>{1, 3, 5, 15});
    CHECK(rep.full_core);
    CHECK(rep.subgroup);
}

TEST_CASE("certificate: rational class") {
    auto G = rational_graph();
    auto cert = certificate_from_graph(G);
    CHECK(cert.r == 0);
    CHECK(cert.rho == 0);
    CHECK(cert.level == 1);
    CHECK(poly::degree(cert.central_poly) == 1);

    auto rep = verify_core_properties(G, cert);
    CHECK(rep.degree_set == std::vector<Int>{1});
    CHECK(rep.full_core); // a single rational vertex is its own core
}

TEST_CASE("certificate consistency chain") {
    for (auto G : {strict_graph(), quartic_graph(), rational_graph()}) {
        auto cert = certificate_from_graph(G);
        bool z_r = cert.r == 0, z_rho = cert.rho == 0, z_N = cert.level == 1;
        bool z_H = poly::degree(cert.central_poly) == 1;
        CHECK(z_r == z_rho);
        CHECK(z_rho == z_N);
        CHECK(z_N == z_H);
        CHECK(cert.rho <= cert.r);
        // 2^rho divides every vertex degree
        for (const auto& m : G.min_polys)
            CHECK(poly::degree(m) % (1 << cert.rho) == 0);
    }
}

TEST_CASE("no central class in an incomplete conjugacy set") {
    auto G = strict_graph();
    // drop the partner vertex: the quadratic group becomes incomplete
    G.vertices.pop_back();
    G.min_polys.pop_back();
    G.edges.clear();
    CHECK_THROWS_AS(certificate_from_graph(G), NoCentralClassFound);
}
