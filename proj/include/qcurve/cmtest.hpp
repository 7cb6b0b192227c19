// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_CMTEST_HPP
#define QCURVE_CMTEST_HPP

#include "qcurve/nf.hpp"

namespace qcurve {

// Hilbert class polynomial table: all imaginary quadratic discriminants with
// class number up to the bundled range (h <= 10, 705 entries)
class CMTable {
public:
    struct Entry {
        Int D;     // discriminant, < 0
        ZPoly H;   // monic, degree = class number h(D)
    };

    // file format: `D h c_0 c_1 ... c_{h-1} 1` per line
    static CMTable load(const std::string& path);

    const std::vector<Entry>& entries() const { return entries_; }
    int max_degree() const { return max_degree_; }

private:
    std::vector<Entry> entries_;
    int max_degree_ = 0;
};

struct CmResult {
    enum Status { NotCM, CM, Undecided } status;
    Int discriminant; // set when status == CM
};

// decide CM by matching the minimal polynomial against the table; a
// non-algebraic-integer j is never CM; degrees beyond the table are Undecided
CmResult is_cm_j(const NFElement& j, const CMTable& table);

} // namespace qcurve

#endif
