// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_IO_HPP
#define QCURVE_IO_HPP

#include "qcurve/qctest.hpp"

#include <json.hpp>

namespace qcurve {

struct NotFound : Error { explicit NotFound(const std::string& m) : Error("not found: " + m) {} };
struct NetworkDisabled : Error {
    explicit NetworkDisabled(const std::string& m) : Error("network disabled and not cached: " + m) {}
};

struct CurveRecord {
    std::string label;                    // optional, LMFDB-style
    ZPoly field_poly;                     // constant term first
    std::array<std::vector<Rat>, 5> ainvs; // a1, a2, a3, a4, a6 coordinate vectors
};

// line format: `label | g_coeffs | a1 | a2 | a3 | a4 | a6`
CurveRecord parse_curve_line(const std::string& line, long line_no);
std::vector<CurveRecord> parse_curve_file(const std::string& path);
std::string record_to_line(const CurveRecord& rec);

// validates the field polynomial and coordinate lengths
EllipticCurveNF record_to_curve(const CurveRecord& rec);

// stable-key JSON for one verdict; all bignums as decimal strings
nlohmann::ordered_json verdict_to_json(const Verdict& v, const std::string& label);

// cached fetch from the LMFDB elliptic-curve-over-number-field API;
// cache layout: <cache_dir>/<label>.curve, one corpus-format line
CurveRecord fetch_lmfdb_curve(const std::string& label, const std::string& cache_dir,
                              bool allow_network = false);

} // namespace qcurve

#endif
