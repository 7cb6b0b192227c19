// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include "qcurve/io.hpp"

using namespace qcurve;

static NumberFieldPtr Qsqrt2() { return NumberField::make({-2, 0, 1}); }

static const std::vector<CurveRecord>& corpus() {
    static auto recs = parse_curve_file(std::string(QCURVE_DATA_DIR) + "/fixtures/corpus.curves");
    return recs;
}

static const CurveRecord& rec(const std::string& label) {
    for (const auto& r : corpus())
        if (r.label == label) return r;
    throw Error("fixture not found: " + label);
}

TEST_CASE("bad_prime_test") {
    auto K = Qsqrt2();
    // rational j: valuations agree at every slot
    CHECK_FALSE(bad_prime_test(NFElement::from_rat(K, Rat(1, 7)),
                               {Int(7)}).has_value());
    // (3 - sqrt2)/7: slot valuations 0 and -1 at p = 7
    NFElement j(K, {Rat(3, 7), Rat(-1, 7)});
    auto obs = bad_prime_test(j, bad_prime_candidates(j));
    REQUIRE(obs.has_value());
    CHECK(obs->p == 7);
    CHECK(obs->clause == "bad_prime");
    CHECK(obs->valuations == std::vector<long>{0, -1});
}

TEST_CASE("good_prime_test finds the first failing prime") {
    // y^2 = x^3 + sqrt2 x + 1: slots over 7 have traces -4 and 3, with
    // squarefree parts -3 and -19 (pinned from an exhaustive-count oracle run)
    auto K = Qsqrt2();
    EllipticCurveNF E(NFElement::zero(K), NFElement::zero(K), NFElement::zero(K),
                      NFElement::gen(K), NFElement::one(K));
    auto scan = local_scan(E, 100, Int(500000));
    auto obs = good_prime_test(scan);
    REQUIRE(obs.has_value());
    CHECK(obs->p == 7);
    CHECK(obs->clause == "good_prime_squarefree");
    CHECK(obs->traces == std::vector<Int>{-4, 3});
    CHECK(obs->sqfree_parts == std::vector<Int>{-3, -19});
}

TEST_CASE("good_prime_test is vacuous over Q") {
    auto K = NumberField::make({0, 1});
    EllipticCurveNF E(NFElement::one(K), NFElement::zero(K), NFElement::one(K),
                      NFElement::from_rat(K, 4), NFElement::from_rat(K, -6));
    auto scan = local_scan(E, 200, Int(500000));
    CHECK_FALSE(good_prime_test(scan).has_value());
}

TEST_CASE("is_q_curve: fixture verdicts and verdict invariants") {
    QcConfig cfg;
    auto run = [&](const std::string& label) {
        auto v = is_q_curve(record_to_curve(rec(label)), cfg);
        // invariants shared by every verdict
        if (v.answer == Verdict::YES) {
            CHECK(v.certificate.has_value());
            CHECK(v.rigorous);
        }
        if (v.answer == Verdict::NO) CHECK(v.rigorous);
        if (v.answer == Verdict::NO_HEURISTIC) CHECK_FALSE(v.rigorous);
        return v;
    };

    auto v = run("14.a1");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.reason == Verdict::RationalJ);
    CHECK(v.rigorous);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->level == 1);

    v = run("strict-2.2.8-4096.a");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.reason == Verdict::ConjugateClassFound);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->r == 1);
    CHECK(v.certificate->rho == 1);
    CHECK(v.certificate->level == 2);
    CHECK(v.certificate->central_poly == QPoly{Rat(-1404928), Rat(-121984), Rat(1)});

    v = run("nonstrict-2.2.8-128.a");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.certificate->level == 1);

    v = run("quartic-4.4.10816.a");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.certificate->r == 2);
    CHECK(v.certificate->rho == 2);
    CHECK(v.certificate->level == 15);
    CHECK(poly::degree(v.certificate->central_poly) == 4);

    v = run("ctrl-badprime");
    CHECK(v.answer == Verdict::NO);
    CHECK(v.rigorous);
    REQUIRE(v.obstruction.has_value());
    CHECK(v.obstruction->p == 7);
    CHECK(v.obstruction->clause == "bad_prime");

    v = run("ctrl-goodprime");
    CHECK(v.answer == Verdict::NO);
    CHECK(v.rigorous);
    REQUIRE(v.obstruction.has_value());

    v = run("cm-54000");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.reason == Verdict::RationalJ); // rational-j check fires before CM

    v = run("cm-quad-15");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.reason == Verdict::CM);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->kind == Certificate::CM);
    CHECK(v.certificate->cm_disc == -15);

    v = run("exceptional-7");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.reason == Verdict::RationalJ);

    v = run("cubic7-yes");
    CHECK(v.answer == Verdict::YES);
    CHECK(v.reason == Verdict::ConjugateClassFound);
    CHECK(v.certificate->level == 1); // odd-degree field: rational class

    v = run("cubic-no");
    CHECK(v.answer == Verdict::NO);
    CHECK(v.rigorous);
}

TEST_CASE("is_q_curve: restricts to Q(j) when j generates a proper subfield") {
    // the strict quadratic j = 60992 - 43136 sqrt2 viewed inside
    // Q(sqrt2, sqrt13), power basis of alpha = sqrt2 + sqrt13:
    // sqrt2 = (alpha^3 - 19 alpha)/22
    auto K4 = NumberField::make({121, 0, -30, 0, 1});
    NFElement j4(K4, {Rat(60992), Rat(409792, 11), Rat(0), Rat(-21568, 11)});
    auto mj = element_minimal_polynomial(j4);
    REQUIRE(mj == QPoly{Rat(-1404928), Rat(-121984), Rat(1)});
    auto v = is_q_curve(EllipticCurveNF::from_j(j4));
    CHECK(v.answer == Verdict::YES);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->r == 1);
    CHECK(v.certificate->rho == 1);
    CHECK(v.certificate->level == 2);
    CHECK(v.certificate->central_poly == QPoly{Rat(-1404928), Rat(-121984), Rat(1)});
    CHECK(v.model_note.find("restricted") != std::string::npos);
}

TEST_CASE("is_q_curve: j = 1728 over an extension is YES by rational j") {
    auto K = Qsqrt2();
    EllipticCurveNF E(NFElement::zero(K), NFElement::zero(K), NFElement::zero(K),
                      NFElement::one(K), NFElement::zero(K));
    auto v = is_q_curve(E);
    CHECK(v.answer == Verdict::YES);
    CHECK(v.reason == Verdict::RationalJ);
    CHECK(v.certificate->central_poly == QPoly{Rat(-1728), Rat(1)});
}

TEST_CASE("is_q_curve: sieve too small for the strict example") {
    QcConfig cfg;
    cfg.b2 = 1; // the 2-isogeny is out of the sieve's reach
    cfg.max_rounds = 2;
    auto v = is_q_curve(record_to_curve(rec("strict-2.2.8-4096.a")), cfg);
    CHECK(v.answer == Verdict::NO_HEURISTIC);
    CHECK(v.reason == Verdict::Exhausted);
    CHECK_FALSE(v.rigorous);
}

TEST_CASE("is_q_curve: monotone in the bounds") {
    QcConfig big;
    big.b1 = 2000;
    big.b2 = 2000;
    auto v = is_q_curve(record_to_curve(rec("strict-2.2.8-4096.a")), big);
    CHECK(v.answer == Verdict::YES);
    CHECK(v.certificate->level == 2);
}

