// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/modpoly.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qcurve {

ModPoly load_modpoly(const std::string& path, long ell) {
    std::ifstream in(path);
    if (!in) throw MissingLevel(ell);
    ModPoly mp;
    mp.ell_ = ell;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) continue;
        if (line[0] != '[') throw ParseError("expected '[i,k] c'", line_no);
        size_t comma = line.find(','), close = line.find(']');
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw ParseError("malformed index pair", line_no);
        int i, k;
        try {
            i = std::stoi(line.substr(1, comma - 1));
            k = std::stoi(line.substr(comma + 1, close - comma - 1));
        } catch (const std::exception&) {
            throw ParseError("bad index", line_no);
        }
        if (i < k) throw ParseError("index pair must have i >= k", line_no);
        if (i > ell + 1 || k > ell + 1) throw ParseError("index exceeds level degree", line_no);
        std::string cs = line.substr(close + 1);
        size_t pos = cs.find_first_not_of(" \t");
        if (pos == std::string::npos) throw ParseError("missing coefficient", line_no);
        Int c;
        if (mpz_set_str(c.get_mpz_t(), cs.substr(pos).c_str(), 10) != 0)
            throw ParseError("bad coefficient", line_no);
        if (!mp.coeffs_.emplace(std::make_pair(i, k), c).second)
            throw ParseError("duplicate index pair", line_no);
    }
    // degree and monicity invariants
    auto lead = mp.coeffs_.find({(int)ell + 1, 0});
    if (lead == mp.coeffs_.end() || lead->second != 1)
        throw ParseError("missing monic leading term [ell+1,0] 1", 0);
    if (mp.coeffs_.count({(int)ell + 1, (int)ell + 1}))
        throw ParseError("unexpected [ell+1,ell+1] term", 0);
    for (const auto& [ik, c] : mp.coeffs_) {
        if (ik.first == (int)ell + 1 && ik.second > 0)
            throw ParseError("degree in X exceeds ell+1 after expansion", 0);
    }
    return mp;
}

std::vector<NFElement> ModPoly::evaluate_at_j(const NFElement& j) const {
    const auto& K = j.field();
    int deg = (int)ell_ + 1;
    std::vector<NFElement> jp(deg + 1, NFElement::one(K));
    for (int i = 1; i <= deg; i++) jp[i] = jp[i - 1] * j;
    std::vector<NFElement> f((size_t)deg + 1, NFElement::zero(K));
    for (const auto& [ik, c] : coeffs_) {
        auto [i, k] = ik;
        NFElement cv = NFElement::from_rat(K, Rat(c));
        f[i] = f[i] + cv * jp[k];
        if (i != k) f[k] = f[k] + cv * jp[i];
    }
    return f;
}

Rat ModPoly::evaluate_rational(const Rat& u, const Rat& v) const {
    int deg = (int)ell_ + 1;
    std::vector<Rat> up(deg + 1, Rat(1)), vp(deg + 1, Rat(1));
    for (int i = 1; i <= deg; i++) { up[i] = up[i - 1] * u; vp[i] = vp[i - 1] * v; }
    Rat acc = 0;
    for (const auto& [ik, c] : coeffs_) {
        auto [i, k] = ik;
        acc += Rat(c) * up[i] * vp[k];
        if (i != k) acc += Rat(c) * up[k] * vp[i];
    }
    return acc;
}

ModPolyDB::ModPolyDB(std::string dir) : dir_(std::move(dir)) {
    std::ifstream mf(dir_ + "/manifest.txt");
    if (!mf) throw Error("modpoly database: missing manifest in " + dir_);
    long l;
    while (mf >> l) levels_.push_back(l);
    std::sort(levels_.begin(), levels_.end());
}

bool ModPolyDB::has(long ell) const {
    return std::binary_search(levels_.begin(), levels_.end(), ell);
}

const ModPoly& ModPolyDB::get(long ell) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(ell);
    if (it != cache_.end()) return it->second;
    if (!has(ell)) throw MissingLevel(ell);
    auto r = cache_.emplace(ell, load_modpoly(dir_ + "/phi_j_" + std::to_string(ell) + ".txt", ell));
    return r.first->second;
}

} // namespace qcurve
