// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

// qcurve: decide whether elliptic curves over number fields are Q-curves and
// emit proof-carrying JSON verdicts.

#include "qcurve/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace qcurve;

int main(int argc, char** argv) {
    CLI::App app{"Q-curve tester: certificates for elliptic curves over number fields"};

    std::string field_coeffs, ainvs_arg, input_path, fetch_label;
    std::string cache_dir = ".";
    QcConfig cfg;
    bool pretty = false, allow_network = false;
    long nb = 500000;

    app.add_option("--field", field_coeffs,
                   "defining polynomial of K, comma-separated integer coefficients, constant first");
    app.add_option("--ainvs", ainvs_arg,
                   "a1|a2|a3|a4|a6, each a semicolon-separated vector of rationals");
    app.add_option("--input", input_path, "curve file: label | g | a1 | a2 | a3 | a4 | a6 per line");
    app.add_option("--b1", cfg.b1, "bound on good test primes (default 1000)");
    app.add_option("--b2", cfg.b2, "bound on reducible primes (default 1000)");
    app.add_option("--norm-bound", nb, "largest residue field used for point counting");
    app.add_option("--max-rounds", cfg.max_rounds, "B1 doubling rounds before giving up");
    app.add_option("--max-vertices", cfg.max_vertices, "isogeny class size cap");
    app.add_option("--modpoly-dir", cfg.modpoly_dir, "modular polynomial database directory");
    app.add_option("--cm-data", cfg.cm_data, "Hilbert class polynomial table");
    app.add_option("--fetch", fetch_label, "fetch one curve by LMFDB label (uses --cache-dir)");
    app.add_option("--cache-dir", cache_dir, "cache directory for fetched curves");
    app.add_flag("--network", allow_network, "allow network access for --fetch (default off)");
    app.add_flag("--json", pretty, "pretty-print a JSON array instead of one object per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.norm_bound = nb;

    std::vector<CurveRecord> records;
    try {
        if (!fetch_label.empty()) {
            records.push_back(fetch_lmfdb_curve(fetch_label, cache_dir, allow_network));
        } else if (!input_path.empty()) {
            records = parse_curve_file(input_path);
        } else if (!field_coeffs.empty() && !ainvs_arg.empty()) {
            records.push_back(parse_curve_line(" | " + field_coeffs + " | " + ainvs_arg, 1));
        } else {
            std::cerr << "qcurve: need --input, --fetch, or --field with --ainvs\n";
            return 2;
        }
    } catch (const Error& e) {
        std::cerr << "qcurve: " << e.what() << "\n";
        return 2;
    }

    CMTable cm_table;
    std::optional<ModPolyDB> db;
    try {
        cm_table = CMTable::load(cfg.cm_data);
        db.emplace(cfg.modpoly_dir);
    } catch (const Error& e) {
        std::cerr << "qcurve: " << e.what() << "\n";
        return 2;
    }

    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json out;
        try {
            EllipticCurveNF E = record_to_curve(rec);
            Verdict v = is_q_curve(E, cfg, cm_table, *db);
            out = verdict_to_json(v, rec.label);
        } catch (const Error& e) {
            out["label"] = rec.label;
            out["error"] = e.what();
        }
        if (pretty) all.push_back(out);
        else std::cout << out.dump() << "\n";
    }
    if (pretty) std::cout << all.dump(2) << "\n";
    return 0;
}
