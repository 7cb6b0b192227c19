// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/isogclass.hpp"
#include "qcurve/hensel.hpp"

#include <algorithm>
#include <deque>

namespace qcurve {
namespace nfp {

NFPoly trim(NFPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int degree(const NFPoly& f) {
    for (int i = (int)f.size() - 1; i >= 0; i--)
        if (!f[i].is_zero()) return i;
    return -1;
}

NFElement eval(const NFPoly& f, const NFElement& x) {
    NFElement acc = NFElement::zero(x.field());
    for (int i = (int)f.size() - 1; i >= 0; i--) acc = acc * x + f[i];
    return acc;
}

NFPoly mul(const NFPoly& a, const NFPoly& b) {
    if (a.empty() || b.empty()) return {};
    const auto& K = a[0].field();
    NFPoly r(a.size() + b.size() - 1, NFElement::zero(K));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); j++)
            if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return trim(r);
}

void divrem(const NFPoly& a, const NFPoly& b, NFPoly& q, NFPoly& r) {
    int db = degree(b);
    if (db < 0) throw Error("nf poly division by zero");
    const auto& K = b[db].field();
    NFElement inv = b[db].inverse();
    r = trim(a);
    q.assign(std::max<int>(degree(r) - db + 1, 0), NFElement::zero(K));
    while (degree(r) >= db) {
        int dr = degree(r);
        NFElement c = r[dr] * inv;
        q[dr - db] = c;
        for (int i = 0; i <= db; i++) r[dr - db + i] = r[dr - db + i] - c * b[i];
        r = trim(r);
    }
    q = trim(q);
}

NFPoly monic(const NFPoly& f) {
    int d = degree(f);
    if (d < 0) return {};
    NFElement inv = f[d].inverse();
    NFPoly r = trim(f);
    for (auto& c : r) c = c * inv;
    return r;
}

NFPoly gcd(NFPoly a, NFPoly b) {
    a = trim(a);
    b = trim(b);
    while (degree(b) >= 0) {
        NFPoly q, r;
        divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return monic(a);
}

NFPoly derivative(const NFPoly& f) {
    if (f.empty()) return {};
    NFPoly r;
    for (size_t i = 1; i < f.size(); i++)
        r.push_back(f[i].scaled(Rat((long)i)));
    return trim(r);
}

} // namespace nfp

LocalScan local_scan(const EllipticCurveNF& E0, long B1, const Int& norm_bound) {
    EllipticCurveNF E = E0.integralize();
    const auto& K = E.field();
    Rat norm_delta_r = E.discriminant().norm();
    Int norm_delta = abs(norm_delta_r.get_num()); // integral model: denominator 1
    LocalScan scan;
    for (uint32_t pu : primes_up_to((uint32_t)B1)) {
        Int p = (unsigned long)pu;
        if (K->poly_disc() % p == 0) continue;
        if (norm_delta % p == 0) continue;
        auto slots = primes_above(K, p);
        bool oversized = false;
        for (const auto& s : slots)
            if (s.norm() > norm_bound) { oversized = true; break; }
        if (oversized) continue;
        std::vector<ReductionData> rds;
        for (const auto& s : slots) {
            ReductionData rd = reduce_and_trace(E, s, norm_bound);
            if (!rd.good) throw Error("local_scan: bad reduction at p not dividing Norm(Delta) (bug)");
            rds.push_back(std::move(rd));
        }
        scan.by_prime.emplace(p, std::move(rds));
    }
    return scan;
}

std::set<long> heuristic_reducible_primes(const LocalScan& scan, long B2) {
    std::set<long> survivors;
    for (uint32_t l : primes_up_to((uint32_t)B2)) survivors.insert((long)l);
    for (const auto& [p, rds] : scan.by_prime) {
        for (const auto& rd : rds) {
            Int d = rd.trace * rd.trace - 4 * rd.norm;
            for (auto it = survivors.begin(); it != survivors.end();) {
                if (p == (unsigned long)*it) { ++it; continue; }
                if (square_status_mod(d, (uint32_t)*it) == -1) it = survivors.erase(it);
                else ++it;
            }
        }
        if (survivors.empty()) break;
    }
    return survivors;
}

std::set<long> heuristic_reducible_primes(const EllipticCurveNF& E, long B1, long B2,
                                          const Int& norm_bound) {
    return heuristic_reducible_primes(local_scan(E, B1, norm_bound), B2);
}

// ---------------------------------------------------------------------------
// roots_in_K

namespace {

struct SlotLiftCtx {
    Int pk;
    ZPoly H;                 // lifted slot factor
    std::vector<ZPoly> fW;   // f's coefficients as elements of Z[x]/(pk, H)
};

// NFElement -> representative in Z[x]/(pk, H); denominators must be prime to p
ZPoly to_slot_poly(const NFElement& a, const Int& pk, const ZPoly& H) {
    ZPoly num;
    for (const auto& c : a.coords()) {
        Int n = c.get_num() % pk, d = c.get_den() % pk, dinv;
        if (n < 0) n += pk;
        if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pk.get_mpz_t()) == 0)
            throw Error("to_slot_poly: denominator not invertible");
        num.push_back((n * dinv) % pk);
    }
    return zp::mod(zp::normalize(std::move(num), pk), H, pk);
}

ZPoly wmul(const ZPoly& a, const ZPoly& b, const ZPoly& H, const Int& pk) {
    return zp::mod(zp::mul(a, b, pk), H, pk);
}

ZPoly weval(const std::vector<ZPoly>& f, const ZPoly& x, const ZPoly& H, const Int& pk) {
    ZPoly acc;
    for (int i = (int)f.size() - 1; i >= 0; i--)
        acc = zp::add(wmul(acc, x, H, pk), f[i], pk);
    return acc;
}

} // namespace

RootsResult roots_in_K(const NFPoly& f0) {
    NFPoly f = nfp::trim(f0);
    if (f.empty()) throw Error("roots_in_K: zero polynomial");
    NumberFieldPtr K = f[0].field(); // by value: f is reassigned below
    int n = K->degree();
    if (nfp::degree(f) == 0) return {{}, true};
    if (!f.back().is_rational() || f.back().rational_value() != 1) f = nfp::monic(f);

    // squarefree part (repeated roots collapse)
    {
        NFPoly g = nfp::gcd(f, nfp::derivative(f));
        if (nfp::degree(g) > 0) {
            NFPoly q, r;
            nfp::divrem(f, g, q, r);
            f = nfp::monic(q);
        }
    }
    int deg = nfp::degree(f);

    // common denominator of all coefficient coordinates
    Int fden = 1;
    for (const auto& c : f) {
        Int d = c.denominator(), l;
        mpz_lcm(l.get_mpz_t(), fden.get_mpz_t(), d.get_mpz_t());
        fden = l;
    }

    const ZPoly& g = K->defining_poly();
    RootsResult out;
    int primes_tried = 0;
    for (uint64_t pc = 10007; primes_tried < 5; pc += 2) {
        Int p((unsigned long)pc);
        if (!is_prime(p)) continue;
        if (K->poly_disc() % p == 0 || fden % p == 0) continue;
        auto slots = primes_above(K, p);
        // per-slot images and roots; all images must be squarefree
        std::vector<std::vector<FqElement>> slot_roots;
        bool usable = true;
        bool any_empty = false;
        for (const auto& s : slots) {
            FqPoly fi;
            for (const auto& c : f) fi.push_back(s.reduce(c));
            fi = fqp::trim(fi);
            if (fqp::degree(fi) != deg) { usable = false; break; }
            if (fqp::degree(fqp::gcd(fi, fqp::derivative(fi))) != 0) { usable = false; break; }
            auto roots = poly_roots_fq(fi);
            if (roots.empty()) any_empty = true;
            slot_roots.push_back(std::move(roots));
        }
        if (!usable) continue;
        primes_tried++;
        if (any_empty) return {{}, true}; // a K-root would reduce to a root at every slot

        size_t combos = 1;
        bool too_many = false;
        for (const auto& r : slot_roots) {
            combos *= r.size();
            if (combos > 4096) { too_many = true; break; }
        }
        if (too_many) continue;

        // height certificate over Q: integer roots of d^m f(Y/d) obey the
        // Cauchy bound, so full reconstruction range proves completeness
        Int cauchy_target = 0;
        if (n == 1) {
            Int dm = 1, maxc = 0;
            ZPoly F((size_t)deg + 1);
            for (int i = deg; i >= 0; i--) {
                Rat ci = f[i].rational_value() * Rat(dm);
                F[i] = to_int(ci);
                if (abs(F[i]) > maxc) maxc = abs(F[i]);
                dm *= fden;
            }
            cauchy_target = 2 * (1 + maxc) * fden + 1;
        }

        int max_level = 7;
        std::vector<bool> combo_done(combos, false);
        std::vector<NFElement> found;
        bool all_resolved = false;
        bool certified = false;
        for (int level = 2; level <= max_level; level++) {
            Int pk;
            std::vector<FpPoly> fbars;
            for (const auto& s : slots) fbars.push_back(s.factor);
            auto lifted = hensel_lift_factorization(g, p, fbars, level, pk);
            auto idems = crt_idempotents(g, p, pk, lifted);

            // lift every slot root to Z[x]/(pk, H_i) by Newton iteration
            std::vector<std::vector<ZPoly>> lifted_roots(slots.size());
            for (size_t si = 0; si < slots.size(); si++) {
                const ZPoly& H = lifted[si];
                std::vector<ZPoly> fW;
                for (const auto& c : f) fW.push_back(to_slot_poly(c, pk, H));
                std::vector<ZPoly> fdW;
                for (size_t i = 1; i < fW.size(); i++)
                    fdW.push_back(zp::normalize(zp::mul(fW[i], ZPoly{Int((long)i)}, pk), pk));
                for (const auto& r0 : slot_roots[si]) {
                    // start from the residue root, u = f'(z)^{-1} mod p
                    ZPoly z = zp::from_fp(r0.rep());
                    // inverse of f'(z) mod (p, h): compute in the residue field
                    FqPoly fd;
                    for (const auto& c : fdW) {
                        // reduce mod p into the slot field
                        FpPoly cp = zp::to_fp(c, mpz_get_ui(p.get_mpz_t()));
                        fd.push_back(FqElement(slots[si].field.get(), cp));
                    }
                    FqElement fdz = fqp::eval(fd, r0);
                    if (fdz.is_zero()) throw Error("roots_in_K: non-squarefree slot image (bug)");
                    ZPoly u = zp::from_fp(fdz.inverse().rep());
                    Int m = p;
                    while (m < pk) {
                        Int m2 = m * m;
                        if (m2 > pk) m2 = pk;
                        ZPoly Hm = zp::normalize(H, m2);
                        std::vector<ZPoly> fm, fdm;
                        for (const auto& c : fW) fm.push_back(zp::normalize(c, m2));
                        for (const auto& c : fdW) fdm.push_back(zp::normalize(c, m2));
                        ZPoly fz = weval(fm, z, Hm, m2);
                        z = zp::sub(z, wmul(fz, u, Hm, m2), m2);
                        ZPoly fdz2 = weval(fdm, z, Hm, m2);
                        ZPoly t = zp::sub(ZPoly{2}, wmul(fdz2, u, Hm, m2), m2);
                        u = wmul(u, t, Hm, m2);
                        m = m2;
                    }
                    lifted_roots[si].push_back(z);
                }
            }

            // all combinations, CRT + rational reconstruction + exact check
            size_t resolved = 0;
            for (size_t ci = 0; ci < combos; ci++) {
                if (combo_done[ci]) { resolved++; continue; }
                size_t rest = ci;
                ZPoly A;
                for (size_t si = 0; si < slots.size(); si++) {
                    size_t ri = rest % slot_roots[si].size();
                    rest /= slot_roots[si].size();
                    A = zp::add(A, zp::mod(zp::mul(lifted_roots[si][ri], idems[si], pk), g, pk), pk);
                }
                std::vector<Rat> coords(n, Rat(0));
                bool ok = true;
                for (int i = 0; i < n && ok; i++) {
                    Int c = (i < (int)A.size()) ? A[i] : Int(0);
                    Int num, den;
                    if (!rational_reconstruct(c, pk, num, den)) ok = false;
                    else coords[i] = Rat(num) / Rat(den);
                }
                if (!ok) continue;
                NFElement cand(K, coords);
                if (nfp::eval(f, cand).is_zero()) {
                    combo_done[ci] = true;
                    found.push_back(cand);
                    resolved++;
                }
            }
            if (resolved == combos) { all_resolved = true; break; }
            if ((int)found.size() == deg) { all_resolved = true; break; }
            if (n == 1 && pk > cauchy_target) {
                // reconstruction range provably covers every integer root
                certified = true;
                break;
            }
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        out.roots = std::move(found);
        out.complete = all_resolved || certified;
        return out;
    }
    throw Error("roots_in_K: no usable prime found");
}

// ---------------------------------------------------------------------------

bool IsogenyClassGraph::has_edge(int u, int v, long ell) const {
    if (u > v) std::swap(u, v);
    for (const auto& [a, b, l] : edges)
        if (a == u && b == v && l == ell) return true;
    return false;
}

std::vector<int> IsogenyClassGraph::neighbors(int u) const {
    std::vector<int> out;
    for (const auto& [a, b, l] : edges) {
        if (a == u) out.push_back(b);
        if (b == u) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int IsogenyClassGraph::vertex_index(const NFElement& j) const {
    for (size_t i = 0; i < vertices.size(); i++)
        if (vertices[i] == j) return (int)i;
    return -1;
}

IsogenyClassGraph build_class_graph(const NFElement& j0, const std::set<long>& ells,
                                    const ModPolyDB& db, int max_vertices) {
    IsogenyClassGraph G;
    G.vertices.push_back(j0);
    G.origin = 0;
    std::deque<int> queue{0};
    std::set<std::tuple<int, int, long>> edge_set;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        NFElement ju = G.vertices[u];
        for (long ell : ells) {
            if (!db.has(ell)) {
                G.missing_levels.insert(ell);
                continue;
            }
            NFPoly f = db.get(ell).evaluate_at_j(ju);
            RootsResult rr = roots_in_K(f);
            if (!rr.complete) G.roots_complete = false;
            for (const auto& jv : rr.roots) {
                if (jv == ju) continue; // self-isogeny only in the CM case
                int v = G.vertex_index(jv);
                if (v < 0) {
                    if ((int)G.vertices.size() >= max_vertices) {
                        G.truncated = true;
                        continue;
                    }
                    G.vertices.push_back(jv);
                    v = (int)G.vertices.size() - 1;
                    queue.push_back(v);
                }
                int a = std::min(u, v), b = std::max(u, v);
                if (edge_set.insert({a, b, ell}).second)
                    G.edges.emplace_back(a, b, ell);
            }
        }
    }
    std::sort(G.edges.begin(), G.edges.end());
    for (const auto& v : G.vertices)
        G.min_polys.push_back(element_minimal_polynomial(v));
    return G;
}

} // namespace qcurve
