// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/cmtest.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qcurve {

CMTable CMTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cm table: cannot open " + path);
    CMTable t;
    std::set<Int> seen;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string ds;
        long h;
        if (!(is >> ds >> h)) throw Error("cm table: bad line " + std::to_string(line_no));
        Entry e;
        e.D = Int(ds);
        if (e.D >= 0 || ((e.D % 4) != 0 && ((e.D - 1) % 4) != 0))
            throw Error("cm table: invalid discriminant at line " + std::to_string(line_no));
        std::string cs;
        while (is >> cs) e.H.push_back(Int(cs));
        if ((long)e.H.size() != h + 1 || e.H.back() != 1)
            throw Error("cm table: degree mismatch at line " + std::to_string(line_no));
        if (!seen.insert(e.D).second)
            throw Error("cm table: duplicate discriminant at line " + std::to_string(line_no));
        t.max_degree_ = std::max(t.max_degree_, (int)h);
        t.entries_.push_back(std::move(e));
    }
    return t;
}

CmResult is_cm_j(const NFElement& j, const CMTable& table) {
    QPoly m = element_minimal_polynomial(j);
    if (!poly::is_integral(m)) return {CmResult::NotCM, 0}; // not an algebraic integer
    ZPoly mz = poly::to_z(m);
    int deg = (int)mz.size() - 1;
    if (deg > table.max_degree()) return {CmResult::Undecided, 0};
    for (const auto& e : table.entries()) {
        if ((int)e.H.size() - 1 != deg) continue;
        if (e.H == mz) return {CmResult::CM, e.D};
    }
    return {CmResult::NotCM, 0};
}

} // namespace qcurve
