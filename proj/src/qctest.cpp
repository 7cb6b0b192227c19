// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/qctest.hpp"

#include <algorithm>

namespace qcurve {

const char* Verdict::answer_name(Answer a) {
    switch (a) {
        case YES: return "YES";
        case NO: return "NO";
        default: return "NO_HEURISTIC";
    }
}

const char* Verdict::reason_name(Reason r) {
    switch (r) {
        case RationalJ: return "RationalJ";
        case CM: return "CM";
        case ConjugateClassFound: return "ConjugateClassFound";
        case LocalObstruction: return "LocalObstruction";
        default: return "Exhausted";
    }
}

std::vector<Int> bad_prime_candidates(const NFElement& j) {
    std::vector<Int> out;
    Int den = j.denominator();
    for (Int d = 2; d <= 1000000 && d * d <= den; d++) {
        if (den % d != 0) continue;
        out.push_back(d);
        while (den % d == 0) den /= d;
    }
    if (den > 1 && is_prime(den)) out.push_back(den);
    // a residual composite cofactor would have only untestably large prime
    // factors; skipping them keeps the test a sound necessary condition
    const auto& K = j.field();
    std::vector<Int> usable;
    for (const auto& p : out)
        if (K->poly_disc() % p != 0) usable.push_back(p);
    return usable;
}

std::optional<LocalObstructionInfo> bad_prime_test(const NFElement& j,
                                                   const std::vector<Int>& candidate_primes) {
    const auto& K = j.field();
    for (const auto& p : candidate_primes) {
        if (K->poly_disc() % p == 0) continue; // unsupported, skipped
        std::vector<long> vals;
        bool ok = true;
        try {
            for (const auto& s : primes_above(K, p))
                vals.push_back(padic_valuation(j, s));
        } catch (const PrecisionExhausted&) {
            ok = false;
        } catch (const FieldTooLarge&) {
            ok = false;
        }
        if (!ok) continue;
        bool has_neg = false, has_nonneg = false;
        for (long v : vals) (v < 0 ? has_neg : has_nonneg) = true;
        if (has_neg && has_nonneg) {
            LocalObstructionInfo o;
            o.p = p;
            o.clause = "bad_prime";
            o.valuations = vals;
            return o;
        }
    }
    return std::nullopt;
}

std::optional<LocalObstructionInfo> good_prime_test(const LocalScan& scan) {
    for (const auto& [p, rds] : scan.by_prime) {
        if (rds.size() < 2) continue; // single slot: vacuous
        bool all_ss = true, all_ord = true;
        for (const auto& rd : rds) (rd.supersingular ? all_ord : all_ss) = false;
        auto witness = [&](const char* clause) {
            LocalObstructionInfo o;
            o.p = p;
            o.clause = clause;
            for (const auto& rd : rds) {
                o.traces.push_back(rd.trace);
                o.norms.push_back(rd.norm);
                o.ss_flags.push_back(rd.supersingular ? 1 : 0);
                if (!rd.supersingular)
                    o.sqfree_parts.push_back(squarefree_part(rd.trace * rd.trace - 4 * rd.norm));
                else
                    o.sqfree_parts.push_back(0);
            }
            return o;
        };
        if (!all_ss && !all_ord) return witness("good_prime_ss_mix");
        if (all_ord) {
            Int first = 0;
            bool differ = false;
            for (const auto& rd : rds) {
                Int d = rd.trace * rd.trace - 4 * rd.norm;
                if (d >= 0) throw Error("good_prime_test: ordinary d_p >= 0 (bug)");
                Int s = squarefree_part(d);
                if (first == 0) first = s;
                else if (s != first) differ = true;
            }
            if (differ) return witness("good_prime_squarefree");
        }
    }
    return std::nullopt;
}

// monic integer defining polynomial for Q(j) via the generator lambda*j
static void restrict_to_qj(const QPoly& mj, NFElement& j_out, std::string& note) {
    int d = poly::degree(mj);
    Int lambda = 1;
    for (const auto& c : mj) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lambda.get_mpz_t(), c.get_den().get_mpz_t());
        lambda = l;
    }
    // g(x) = lambda^d * mj(x/lambda), monic integral
    ZPoly g;
    Rat scale = 1;
    for (int i = d; i >= 0; i--) {
        // coefficient of x^i is mj[i] * lambda^(d-i)
        g.insert(g.begin(), to_int(Rat(mj[i] * scale)));
        scale *= Rat(lambda);
    }
    auto Kj = NumberField::make(g);
    std::vector<Rat> coords(d, Rat(0));
    coords[1] = Rat(1) / Rat(lambda);
    j_out = NFElement(Kj, std::move(coords));
    note = "restricted to Q(j), degree " + std::to_string(d);
}

Verdict is_q_curve(const EllipticCurveNF& E, const QcConfig& cfg,
                   const CMTable& cm_table, const ModPolyDB& db) {
    if (E.field()->degree() < 1) throw UnsupportedField("degree 0");
    Verdict out;
    out.b1_used = cfg.b1;
    out.b2_used = cfg.b2;

    NFElement j = E.j_invariant();

    // line 1: rational j
    if (j.is_rational()) {
        out.answer = Verdict::YES;
        out.reason = Verdict::RationalJ;
        out.rigorous = true;
        out.certificate = Certificate::rational_j(j.rational_value());
        return out;
    }

    // line 2: CM (the answer only depends on j, so it precedes any model change)
    bool cm_undecided = false;
    {
        auto cm = is_cm_j(j, cm_table);
        if (cm.status == CmResult::CM) {
            out.answer = Verdict::YES;
            out.reason = Verdict::CM;
            out.rigorous = true;
            out.certificate = Certificate::cm(cm.discriminant);
            return out;
        }
        cm_undecided = (cm.status == CmResult::Undecided);
    }

    // trivial first step: work over Q(j) with the standard model; all the
    // remaining tests depend only on j (quadratic twists are isogenous to the
    // conjugate-twisted curves over the closure), so this is verdict-neutral
    QPoly mj = element_minimal_polynomial(j);
    int dj = poly::degree(mj);
    if (dj < E.field()->degree()) {
        restrict_to_qj(mj, j, out.model_note);
    } else if (out.model_note.empty()) {
        out.model_note = "standard model from j";
    }
    EllipticCurveNF Ework = EllipticCurveNF::from_j(j).integralize();

    // line 4: consistency of negative valuations of j at bad prime candidates
    // (denominator primes of j, padded with the Norm(Delta) superset)
    std::vector<Int> bad_candidates = bad_prime_candidates(j);
    {
        const auto& K = j.field();
        for (const auto& p : bad_prime_superset(Ework, Int(100000)))
            if (K->poly_disc() % p != 0 &&
                std::find(bad_candidates.begin(), bad_candidates.end(), p) == bad_candidates.end())
                bad_candidates.push_back(p);
        std::sort(bad_candidates.begin(), bad_candidates.end());
    }
    if (auto obs = bad_prime_test(j, bad_candidates)) {
        out.answer = Verdict::NO;
        out.reason = Verdict::LocalObstruction;
        out.rigorous = true;
        out.obstruction = obs;
        return out;
    }

    long b1 = cfg.b1;
    for (int round = 1; round <= cfg.max_rounds; round++) {
        out.b1_used = b1;
        LocalScan scan = local_scan(Ework, b1, cfg.norm_bound);

        // line 5: good-prime local tests
        if (auto obs = good_prime_test(scan)) {
            out.answer = Verdict::NO;
            out.reason = Verdict::LocalObstruction;
            out.rigorous = true;
            out.obstruction = obs;
            return out;
        }

        // lines 6-10: partial isogeny class and conjugacy search; over an
        // odd-degree field only a rational vertex can succeed (2^rho | deg m_j)
        auto ells = heuristic_reducible_primes(scan, cfg.b2);
        IsogenyClassGraph G = build_class_graph(j, ells, db, cfg.max_vertices);
        try {
            Certificate cert = certificate_from_graph(G);
            out.answer = Verdict::YES;
            out.reason = Verdict::ConjugateClassFound;
            out.rigorous = true;
            if (!cm_undecided)
                out.core_report = verify_core_properties(G, cert);
            out.certificate = std::move(cert);
            return out;
        } catch (const NoCentralClassFound&) {
            // lines 11-13, heuristic variant: double B1 and rerun
            b1 *= 2;
        }
    }
    out.answer = Verdict::NO_HEURISTIC;
    out.reason = Verdict::Exhausted;
    out.rigorous = false;
    return out;
}

Verdict is_q_curve(const EllipticCurveNF& E, const QcConfig& cfg) {
    static std::map<std::string, CMTable> cm_cache;
    static std::map<std::string, ModPolyDB> db_cache;
    auto cm = cm_cache.find(cfg.cm_data);
    if (cm == cm_cache.end())
        cm = cm_cache.emplace(cfg.cm_data, CMTable::load(cfg.cm_data)).first;
    auto db = db_cache.find(cfg.modpoly_dir);
    if (db == db_cache.end())
        db = db_cache.try_emplace(cfg.modpoly_dir, cfg.modpoly_dir).first;
    return is_q_curve(E, cfg, cm->second, db->second);
}

} // namespace qcurve
