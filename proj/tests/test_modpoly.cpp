// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include "qcurve/modpoly.hpp"

#include <fstream>
#include <random>

using namespace qcurve;

static const std::string kDir = std::string(QCURVE_DATA_DIR) + "/modpoly";

TEST_CASE("load_modpoly level 2") {
    ModPoly phi2 = load_modpoly(kDir + "/phi_j_2.txt", 2);
    CHECK(phi2.coeffs().at({0, 0}) == Int("-157464000000000"));
    int max_i = 0;
    for (const auto& [ik, c] : phi2.coeffs()) max_i = std::max(max_i, ik.first);
    CHECK(max_i == 3); // degree ell+1 in X
}

TEST_CASE("malformed database lines") {
    std::string tmp = "/tmp/qcurve_phi_bad.txt";
    {
        std::ofstream f(tmp);
        f << "[3,0] 1\n[1,2] 5\n";
    }
    CHECK_THROWS_AS(load_modpoly(tmp, 2), ParseError);
    {
        std::ofstream f(tmp);
        f << "[3,0] 1\n[2,0] not_a_number\n";
    }
    CHECK_THROWS_AS(load_modpoly(tmp, 2), ParseError);
    CHECK_THROWS_AS(load_modpoly("/nonexistent/phi_j_2.txt", 2), MissingLevel);
}

TEST_CASE("evaluate_at_j at 0 gives (X - 54000)^3") {
    ModPoly phi2 = load_modpoly(kDir + "/phi_j_2.txt", 2);
    auto K = NumberField::make({0, 1});
    auto f = phi2.evaluate_at_j(NFElement::zero(K));
    REQUIRE(f.size() == 4);
    CHECK(f[3].rational_value() == 1);
    CHECK(f[2].rational_value() == -162000);          // -3 * 54000
    CHECK(f[1].rational_value() == Int("8748000000")); // 3 * 54000^2
    CHECK(f[0].rational_value() == Int("-157464000000000")); // -54000^3
}

TEST_CASE("evaluate_at_j stays monic of degree ell+1 over an extension") {
    ModPoly phi3 = load_modpoly(kDir + "/phi_j_3.txt", 3);
    auto K = NumberField::make({-2, 0, 1});
    auto f = phi3.evaluate_at_j(NFElement::gen(K)); // j = sqrt2, symbolic enough
    REQUIRE(f.size() == 5);
    CHECK(f[4] == NFElement::one(K));
}

TEST_CASE("symmetry at random rational pairs") {
    std::mt19937 rng(996633);
    for (long ell : {2L, 3L, 5L}) {
        ModPoly phi = load_modpoly(kDir + "/phi_j_" + std::to_string(ell) + ".txt", ell);
        for (int t = 0; t < 8; t++) {
            Rat u((long)(rng() % 2000) - 1000, (long)(rng() % 9) + 1);
            Rat v((long)(rng() % 2000) - 1000, (long)(rng() % 9) + 1);
            CHECK(phi.evaluate_rational(u, v) == phi.evaluate_rational(v, u));
        }
    }
}

TEST_CASE("Kronecker congruence mod ell") {
    // Phi_ell(X,Y) = (X^ell - Y)(X - Y^ell) mod ell, coefficientwise
    for (long ell : {2L, 3L, 5L}) {
        ModPoly phi = load_modpoly(kDir + "/phi_j_" + std::to_string(ell) + ".txt", ell);
        int d = (int)ell + 1;
        std::vector<std::vector<Int>> M((size_t)d + 1, std::vector<Int>((size_t)d + 1, 0));
        for (const auto& [ik, c] : phi.coeffs()) {
            M[ik.first][ik.second] = c;
            M[ik.second][ik.first] = c;
        }
        std::vector<std::vector<Int>> Kr((size_t)d + 1, std::vector<Int>((size_t)d + 1, 0));
        Kr[d][0] = 1;
        Kr[0][d] = 1;
        Kr[ell][ell] = -1;
        Kr[1][1] = -1;
        for (int i = 0; i <= d; i++)
            for (int k = 0; k <= d; k++)
                CHECK((M[i][k] - Kr[i][k]) % ell == 0);
    }
}

TEST_CASE("database manifest") {
    ModPolyDB db(kDir);
    CHECK(db.has(2));
    CHECK(db.has(41));
    CHECK_FALSE(db.has(43));
    CHECK(db.get(41).level() == 41);
    CHECK_THROWS_AS(db.get(43), MissingLevel);
    CHECK(db.levels().size() == 13); // all primes up to 41
}
