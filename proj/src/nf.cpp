// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/nf.hpp"
#include "qcurve/hensel.hpp"

#include <algorithm>
#include <sstream>

namespace qcurve {

NumberField::NumberField(ZPoly g) : g_(std::move(g)) {
    n_ = (int)g_.size() - 1;
    QPoly gq = poly::from_z(g_);
    disc_ = to_int(poly::discriminant(gq));
    if (disc_ == 0) throw Reducible(); // repeated factor
}

NumberFieldPtr NumberField::make(const ZPoly& g0) {
    ZPoly g = g0;
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.size() < 2) throw Error("degree must be >= 1");
    if (g.back() != 1) throw NotMonic();
    if (g.size() > 2 && !is_irreducible_monic(g)) throw Reducible();
    return NumberFieldPtr(new NumberField(std::move(g)));
}

std::vector<Rat> NumberField::reduce(const QPoly& f) const {
    QPoly q, r;
    poly::divrem(f, poly::from_z(g_), q, r);
    r.resize(n_, Rat(0));
    return r;
}

NFElement::NFElement(NumberFieldPtr K, std::vector<Rat> coords) : K_(std::move(K)), c_(std::move(coords)) {
    if ((int)c_.size() != K_->degree())
        throw Error("NFElement: coordinate length != field degree");
    for (auto& x : c_) x.canonicalize();
}

NFElement NFElement::zero(const NumberFieldPtr& K) {
    return NFElement(K, std::vector<Rat>(K->degree(), Rat(0)));
}
NFElement NFElement::one(const NumberFieldPtr& K) { return from_rat(K, 1); }
NFElement NFElement::from_rat(const NumberFieldPtr& K, const Rat& r) {
    std::vector<Rat> c(K->degree(), Rat(0));
    c[0] = r;
    return NFElement(K, std::move(c));
}
NFElement NFElement::gen(const NumberFieldPtr& K) {
    if (K->degree() == 1) {
        // x ≡ -g[0]
        return from_rat(K, Rat(-K->defining_poly()[0]));
    }
    std::vector<Rat> c(K->degree(), Rat(0));
    c[1] = 1;
    return NFElement(K, std::move(c));
}

bool NFElement::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); i++)
        if (c_[i] != 0) return false;
    return true;
}

Rat NFElement::rational_value() const {
    if (!is_rational()) throw Error("element is not rational");
    return c_[0];
}

NFElement NFElement::operator+(const NFElement& o) const {
    std::vector<Rat> r = c_;
    for (size_t i = 0; i < r.size(); i++) r[i] += o.c_[i];
    return NFElement(K_, std::move(r));
}

NFElement NFElement::operator-(const NFElement& o) const {
    std::vector<Rat> r = c_;
    for (size_t i = 0; i < r.size(); i++) r[i] -= o.c_[i];
    return NFElement(K_, std::move(r));
}

NFElement NFElement::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x = -x;
    return NFElement(K_, std::move(r));
}

NFElement NFElement::operator*(const NFElement& o) const {
    QPoly prod = poly::mul(c_, o.c_);
    return NFElement(K_, K_->reduce(prod));
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw ZeroElement();
    // extended euclid in Q[x]: s*a + t*g = 1
    QPoly r0 = poly::trim(c_), r1 = poly::from_z(K_->defining_poly());
    QPoly s0{Rat(1)}, s1{};
    while (!poly::is_zero(r1)) {
        QPoly q, r;
        poly::divrem(r0, r1, q, r);
        QPoly s2 = poly::sub(s0, poly::mul(q, s1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
    }
    if (poly::degree(r0) != 0) throw Error("inverse: gcd not constant (g reducible?)");
    return NFElement(K_, K_->reduce(poly::scale(s0, Rat(1) / r0[0])));
}

NFElement NFElement::operator/(const NFElement& o) const { return *this * o.inverse(); }

NFElement NFElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElement r = one(K_), b = *this;
    unsigned long u = (unsigned long)e;
    while (u) {
        if (u & 1) r = r * b;
        b = b * b;
        u >>= 1;
    }
    return r;
}

bool NFElement::operator==(const NFElement& o) const {
    return K_.get() == o.K_.get() && c_ == o.c_;
}

bool NFElement::operator<(const NFElement& o) const {
    for (size_t i = 0; i < c_.size(); i++)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

NFElement NFElement::scaled(const Rat& r) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= r;
    return NFElement(K_, std::move(c));
}

// multiplication matrix of *this in the power basis (column j = coords of a*x^j)
static std::vector<std::vector<Rat>> mult_matrix(const NFElement& a) {
    const auto& K = a.field();
    int n = K->degree();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    QPoly cur = a.coords();
    for (int j = 0; j < n; j++) {
        auto col = K->reduce(cur);
        for (int i = 0; i < n; i++) M[i][j] = col[i];
        // multiply by x
        cur.insert(cur.begin(), Rat(0));
        cur = K->reduce(cur);
    }
    return M;
}

Rat NFElement::norm() const {
    auto M = mult_matrix(*this);
    int n = K_->degree();
    // Gaussian elimination determinant
    Rat det = 1;
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (M[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(M[piv], M[col]); det = -det; }
        det *= M[col][col];
        Rat inv = Rat(1) / M[col][col];
        for (int r = col + 1; r < n; r++) {
            if (M[r][col] == 0) continue;
            Rat f = M[r][col] * inv;
            for (int cc = col; cc < n; cc++) M[r][cc] -= f * M[col][cc];
        }
    }
    return det;
}

Rat NFElement::trace() const {
    auto M = mult_matrix(*this);
    Rat t = 0;
    for (int i = 0; i < K_->degree(); i++) t += M[i][i];
    return t;
}

Int NFElement::denominator() const {
    Int d = 1;
    for (const auto& x : c_) {
        Int g;
        mpz_lcm(g.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
        d = g;
    }
    return d;
}

std::string NFElement::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); i++) {
        if (i) os << ";";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

QPoly element_minimal_polynomial(const NFElement& a) {
    const auto& K = a.field();
    int n = K->degree();
    // rows of powers a^0 .. a^k; find first linear dependency
    std::vector<std::vector<Rat>> pows;
    NFElement cur = NFElement::one(K);
    pows.push_back(cur.coords());
    for (int k = 1; k <= n; k++) {
        cur = cur * a;
        pows.push_back(cur.coords());
        // solve sum_{i<k} x_i * pows[i] = pows[k]
        int rows = n, cols = k;
        std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols + 1, Rat(0)));
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) M[i][j] = pows[j][i];
            M[i][cols] = pows[k][i];
        }
        // gaussian elimination
        std::vector<int> pivot_col_of_row;
        int rr = 0;
        for (int c = 0; c < cols && rr < rows; c++) {
            int piv = -1;
            for (int r2 = rr; r2 < rows; r2++)
                if (M[r2][c] != 0) { piv = r2; break; }
            if (piv < 0) continue;
            std::swap(M[piv], M[rr]);
            Rat inv = Rat(1) / M[rr][c];
            for (int cc = c; cc <= cols; cc++) M[rr][cc] *= inv;
            for (int r2 = 0; r2 < rows; r2++) {
                if (r2 == rr || M[r2][c] == 0) continue;
                Rat f = M[r2][c];
                for (int cc = c; cc <= cols; cc++) M[r2][cc] -= f * M[rr][cc];
            }
            pivot_col_of_row.push_back(c);
            rr++;
        }
        // consistent?
        bool consistent = true;
        for (int r2 = rr; r2 < rows; r2++)
            if (M[r2][cols] != 0) { consistent = false; break; }
        if (!consistent) continue;
        QPoly m(k + 1, Rat(0));
        m[k] = 1;
        for (int r2 = 0; r2 < (int)pivot_col_of_row.size(); r2++)
            m[pivot_col_of_row[r2]] = -M[r2][cols];
        return m;
    }
    throw Error("minimal polynomial: no dependency found (bug)");
}

Int PrimeSlot::norm() const {
    Int q = 1;
    for (int i = 0; i < residue_degree; i++) q *= p;
    return q;
}

FqElement PrimeSlot::reduce(const NFElement& a) const {
    FqElement acc = FqElement::zero(field.get());
    const auto& c = a.coords();
    for (int i = (int)c.size() - 1; i >= 0; i--) {
        Int num = c[i].get_num(), den = c[i].get_den();
        if (den % p == 0) throw Error("reduce: denominator not coprime to p");
        Int pz = p;
        Int nm = num % pz; if (nm < 0) nm += pz;
        Int dm = den % pz;
        uint64_t nu = mpz_get_ui(nm.get_mpz_t());
        uint64_t du = mpz_get_ui(dm.get_mpz_t());
        uint64_t pu = mpz_get_ui(pz.get_mpz_t());
        uint64_t v = fp::mulm(nu, fp::invm(du, pu), pu);
        acc = acc * local_root + FqElement::from_uint(field.get(), v);
    }
    return acc;
}

std::vector<PrimeSlot> primes_above(const NumberFieldPtr& K, const Int& p) {
    if (!is_prime(p)) throw Error("primes_above: p not prime");
    if (K->poly_disc() % p == 0) throw RamifiedOrNonMaximal(p);
    if (!p.fits_ulong_p()) throw FieldTooLarge("prime too large for residue arithmetic");
    uint64_t pu = mpz_get_ui(p.get_mpz_t());
    FpPoly gbar = zp::to_fp(K->defining_poly(), pu);
    if (fp::degree(gbar) != K->degree())
        throw Error("primes_above: leading coefficient vanished (non-monic?)");
    auto factors = fp::factor_squarefree(gbar, pu);
    std::vector<PrimeSlot> slots;
    for (const auto& h : factors) {
        PrimeSlot s;
        s.p = p;
        s.residue_degree = fp::degree(h);
        s.factor = h;
        s.field = std::make_shared<FqField>(pu, h);
        s.local_root = FqElement(s.field.get(), FpPoly{0, 1});
        slots.push_back(std::move(s));
    }
    std::sort(slots.begin(), slots.end(), [](const PrimeSlot& a, const PrimeSlot& b) {
        if (a.residue_degree != b.residue_degree) return a.residue_degree < b.residue_degree;
        return a.local_root.index() < b.local_root.index();
    });
    for (size_t i = 0; i < slots.size(); i++) slots[i].slot_index = (int)i;
    int fsum = 0;
    for (const auto& s : slots) fsum += s.residue_degree;
    if (fsum != K->degree()) throw Error("primes_above: residue degrees do not sum to n (bug)");
    return slots;
}

long padic_valuation(const NFElement& a, const PrimeSlot& slot, int max_doublings) {
    if (a.is_zero()) throw ZeroElement();
    const Int& p = slot.p;
    Int den = a.denominator();
    long vden = (den % p == 0) ? valuation(den, p) : 0;
    // numerator polynomial A = den * a, integral coordinates
    ZPoly A;
    for (const auto& c : a.coords()) A.push_back(to_int(Rat(c * Rat(den))));
    A = zp::trim(std::move(A));
    if (A.empty()) throw ZeroElement();

    const ZPoly& g = a.field()->defining_poly();
    for (int k = 2; k <= max_doublings; k++) {
        Int pk;
        ZPoly H = hensel_lift_factor(g, p, slot.factor, k, pk);
        ZPoly B = zp::mod(zp::normalize(A, pk), H, pk);
        long prec = 1L << k; // pk = p^(2^k)
        long v = prec;
        for (const auto& c : B)
            if (c != 0) v = std::min(v, valuation(c, p));
        // a value strictly below the working precision cannot change on lifting
        if (v < prec) return v - vden;
    }
    throw PrecisionExhausted();
}

} // namespace qcurve
