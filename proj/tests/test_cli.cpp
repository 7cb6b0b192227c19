// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include "qcurve/io.hpp"

#include <cstdio>
#include <fstream>
#include <sys/stat.h>

using namespace qcurve;

TEST_CASE("parse_curve_line round trip") {
    std::string line = "14.a1 | 0,1 | 1 | 0 | 1 | 4 | -6";
    auto rec = parse_curve_line(line, 1);
    CHECK(rec.label == "14.a1");
    CHECK(rec.field_poly == ZPoly{0, 1});
    CHECK(rec.ainvs[3] == std::vector<Rat>{Rat(4)});
    auto rec2 = parse_curve_line(record_to_line(rec), 1);
    CHECK(rec2.label == rec.label);
    CHECK(rec2.field_poly == rec.field_poly);
    for (int i = 0; i < 5; i++) CHECK(rec2.ainvs[i] == rec.ainvs[i]);
}

TEST_CASE("parse_curve_line rejects bad input") {
    // three coordinates for a quadratic field
    CHECK_THROWS_AS(parse_curve_line("x | -2,0,1 | 0;0;0 | 0;0 | 0;0 | 0;0 | 1;0", 3), ParseError);
    CHECK_THROWS_AS(parse_curve_line("x | -2,0,1 | 0;0 | 0;0 | 0;0 | 0;0", 4), ParseError);
    CHECK_THROWS_AS(parse_curve_line("x | -2,0,1 | a;b | 0;0 | 0;0 | 0;0 | 1;0", 5), ParseError);
    // empty file parses to an empty list
    std::string tmp = "/tmp/qcurve_empty.curves";
    { std::ofstream f(tmp); }
    CHECK(parse_curve_file(tmp).empty());
}

TEST_CASE("corpus round trip") {
    auto recs = parse_curve_file(std::string(QCURVE_DATA_DIR) + "/fixtures/corpus.curves");
    CHECK(recs.size() == 11);
    for (const auto& r : recs) {
        auto r2 = parse_curve_line(record_to_line(r), 1);
        CHECK(r2.field_poly == r.field_poly);
        for (int i = 0; i < 5; i++) CHECK(r2.ainvs[i] == r.ainvs[i]);
    }
}

TEST_CASE("verdict JSON is schema stable") {
    auto recs = parse_curve_file(std::string(QCURVE_DATA_DIR) + "/fixtures/corpus.curves");
    QcConfig cfg;
    auto find = [&](const std::string& label) -> const CurveRecord& {
        for (const auto& r : recs)
            if (r.label == label) return r;
        throw Error("missing " + label);
    };
    // golden strings: frozen after the verdicts were derived and checked
    auto v = is_q_curve(record_to_curve(find("ctrl-badprime")), cfg);
    CHECK(verdict_to_json(v, "ctrl-badprime").dump() ==
          R"({"label":"ctrl-badprime","answer":"NO","reason":{"p":"7","clause":"bad_prime"},)"
          R"("rigorous":true,"bounds_used":[1000,1000],)"
          R"("witnesses":{"model":"standard model from j","valuations":[0,-1]}})");

    v = is_q_curve(record_to_curve(find("strict-2.2.8-4096.a")), cfg);
    CHECK(verdict_to_json(v, "strict-2.2.8-4096.a").dump() ==
          R"({"label":"strict-2.2.8-4096.a","answer":"YES","reason":"ConjugateClassFound",)"
          R"("rigorous":true,"certificate":{"kind":"NonCM","r":1,"rho":1,"level":"2",)"
          R"("H":["-1404928","-121984","1"]},"bounds_used":[1000,1000],)"
          R"("witnesses":{"model":"standard model from j","core":{"degree_set":["1","2"],)"
          R"("full_core":true,"central_distance_upper":"1"}}})");

    v = is_q_curve(record_to_curve(find("cm-quad-15")), cfg);
    CHECK(verdict_to_json(v, "cm-quad-15").dump() ==
          R"({"label":"cm-quad-15","answer":"YES","reason":"CM","rigorous":true,)"
          R"("certificate":{"kind":"CM","cm_disc":"-15"},"bounds_used":[1000,1000]})");
}

TEST_CASE("fetch_lmfdb_curve cache behaviour") {
    std::string dir = "/tmp/qcurve_cache_test";
    std::remove((dir + "/2.2.8.1-4096.1-a1.curve").c_str());
    (void)mkdir(dir.c_str(), 0755);
    // miss with networking off
    CHECK_THROWS_AS(fetch_lmfdb_curve("2.2.8.1-4096.1-a1", dir, false), NetworkDisabled);
    // seed the cache, then hit it
    {
        std::ofstream f(dir + "/2.2.8.1-4096.1-a1.curve");
        f << "2.2.8.1-4096.1-a1 | -2,0,1 | 0;0 | 0;0 | 0;0 | -22008176640;15562088448 | "
             "-1764576716652544;1247744211550208\n";
    }
    auto rec = fetch_lmfdb_curve("2.2.8.1-4096.1-a1", dir, false);
    CHECK(rec.field_poly == ZPoly{-2, 0, 1});
    CHECK(rec.ainvs[3][1] == Rat(Int("15562088448")));
    // nonsense labels are rejected before any network use
    CHECK_THROWS_AS(fetch_lmfdb_curve("../etc/passwd", dir, true), NotFound);
}
