// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#ifndef QCURVE_MODPOLY_HPP
#define QCURVE_MODPOLY_HPP

#include "qcurve/nf.hpp"

#include <map>
#include <mutex>

namespace qcurve {

struct MissingLevel : Error {
    explicit MissingLevel(long l) : Error("no modular polynomial for level " + std::to_string(l)) {}
};
struct ParseError : Error {
    ParseError(const std::string& what, long line)
        : Error(what + " at line " + std::to_string(line)), line_no(line) {}
    long line_no;
};

// classical modular polynomial Phi_ell as a symmetric coefficient table;
// keys (i, k) with i >= k, the (i, k) entry also standing for (k, i)
class ModPoly {
public:
    long level() const { return ell_; }
    const std::map<std::pair<int, int>, Int>& coeffs() const { return coeffs_; }

    // f(X) = Phi_ell(X, j), monic of degree ell+1 over j's field
    std::vector<NFElement> evaluate_at_j(const NFElement& j) const;
    // exact evaluation at a rational pair (for symmetry property tests)
    Rat evaluate_rational(const Rat& u, const Rat& v) const;

    friend ModPoly load_modpoly(const std::string& path, long ell);

private:
    long ell_ = 0;
    std::map<std::pair<int, int>, Int> coeffs_;
};

// parse the plain-text database format: one `[i,k] c` line per coefficient
ModPoly load_modpoly(const std::string& path, long ell);

// lazily-loading database over a directory with phi_j_<ell>.txt files and a
// manifest listing the available levels
class ModPolyDB {
public:
    explicit ModPolyDB(std::string dir);
    const ModPoly& get(long ell) const;
    bool has(long ell) const;
    const std::vector<long>& levels() const { return levels_; }

private:
    std::string dir_;
    std::vector<long> levels_;
    mutable std::mutex mu_; // loaded tables are immutable; the cache is not
    mutable std::map<long, ModPoly> cache_;
};

} // namespace qcurve

#endif
