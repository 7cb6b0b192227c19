// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_QCTEST_HPP
#define QCURVE_QCTEST_HPP

#include "qcurve/cmtest.hpp"
#include "qcurve/qcore.hpp"

#include <optional>

namespace qcurve {

struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& m) : Error("unsupported field: " + m) {}
};

struct QcConfig {
    long b1 = 1000;
    long b2 = 1000;
    Int norm_bound = 500000;
    int max_rounds = 3;
    int max_vertices = 128;
    std::string modpoly_dir = std::string(QCURVE_DATA_DIR) + "/modpoly";
    std::string cm_data = std::string(QCURVE_DATA_DIR) + "/cm/hilbert_class_polys.txt";
};

struct LocalObstructionInfo {
    Int p;
    std::string clause; // "bad_prime" | "good_prime_ss_mix" | "good_prime_squarefree"
    // bad-prime witness: slot valuations of j
    std::vector<long> valuations;
    // good-prime witness: per-slot data
    std::vector<Int> traces;
    std::vector<Int> norms;
    std::vector<int> ss_flags;
    std::vector<Int> sqfree_parts;
};

struct Verdict {
    enum Answer { YES, NO, NO_HEURISTIC } answer = NO_HEURISTIC;
    enum Reason { RationalJ, CM, ConjugateClassFound, LocalObstruction, Exhausted } reason = Exhausted;
    bool rigorous = false;
    std::optional<Certificate> certificate;
    std::optional<LocalObstructionInfo> obstruction;
    std::optional<PropertyReport> core_report;
    long b1_used = 0;
    long b2_used = 0;
    // set when the curve was replaced by a model over Q(j) or by the standard
    // model with the same j (the tests only depend on j)
    std::string model_note;

    static const char* answer_name(Answer a);
    static const char* reason_name(Reason r);
};

// prime-by-prime consistency of the negative valuations of j across slots
std::optional<LocalObstructionInfo> bad_prime_test(const NFElement& j,
                                                   const std::vector<Int>& candidate_primes);

// ordinary/supersingular agreement and matching squarefree parts of
// a_p^2 - 4N(p) across the slots of every scanned good prime
std::optional<LocalObstructionInfo> good_prime_test(const LocalScan& scan);

// primes dividing the denominator of j (trial division plus a prime
// cofactor), minus primes dividing disc(g)
std::vector<Int> bad_prime_candidates(const NFElement& j);

Verdict is_q_curve(const EllipticCurveNF& E, const QcConfig& cfg,
                   const CMTable& cm_table, const ModPolyDB& db);
// convenience: loads the bundled data from cfg paths
Verdict is_q_curve(const EllipticCurveNF& E, const QcConfig& cfg = {});

} // namespace qcurve

#endif
