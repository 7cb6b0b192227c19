// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include "qcurve/cmtest.hpp"

using namespace qcurve;

static const CMTable& table() {
    static CMTable t = CMTable::load(std::string(QCURVE_DATA_DIR) + "/cm/hilbert_class_polys.txt");
    return t;
}

TEST_CASE("table shape") {
    CHECK(table().entries().size() == 705);
    CHECK(table().max_degree() == 10);
    int deg1 = 0;
    for (const auto& e : table().entries())
        if (e.H.size() == 2) deg1++;
    CHECK(deg1 == 13); // the rational CM j-invariants
}

TEST_CASE("is_cm_j on rational points") {
    auto K = NumberField::make({0, 1});
    auto cm = is_cm_j(NFElement::from_rat(K, 1728), table());
    CHECK(cm.status == CmResult::CM);
    CHECK(cm.discriminant == -4);

    cm = is_cm_j(NFElement::from_rat(K, 54000), table());
    CHECK(cm.status == CmResult::CM);
    CHECK(cm.discriminant == -12);

    cm = is_cm_j(NFElement::from_rat(K, Rat(-6912, 23)), table());
    CHECK(cm.status == CmResult::NotCM); // non-integral

    cm = is_cm_j(NFElement::from_rat(K, 54001), table());
    CHECK(cm.status == CmResult::NotCM);
}

TEST_CASE("closure on the quadratic entries") {
    // every root of every degree-2 H_D, fed back in, matches its own D
    int tested = 0;
    for (const auto& e : table().entries()) {
        if (e.H.size() != 3) continue;
        auto K = NumberField::make(e.H);
        auto cm = is_cm_j(NFElement::gen(K), table());
        CHECK(cm.status == CmResult::CM);
        CHECK(cm.discriminant == e.D);
        tested++;
    }
    CHECK(tested == 29);
}

TEST_CASE("degree beyond the table is undecided") {
    auto K = NumberField::make({-2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}); // x^11 - 2
    auto cm = is_cm_j(NFElement::gen(K), table());
    CHECK(cm.status == CmResult::Undecided);
}
