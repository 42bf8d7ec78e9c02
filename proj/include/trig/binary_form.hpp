#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "trig/error.hpp"
#include "trig/matrix2.hpp"
#include "trig/upoly.hpp"

namespace trig {

/// Homogeneous binary form of declared degree d in x1, x2 over an exact
/// scalar ring K. coeffs[i] is the coefficient of x1^(d-i) * x2^i, so the
/// representation is structurally homogeneous. The zero form keeps its
/// declared degree.
template <class K>
class BinaryForm {
  public:
    BinaryForm() : deg_(0), c_(1, K{}) {}
    explicit BinaryForm(int degree) : deg_(degree), c_(degree + 1, K{}) {
        if (degree < 0) throw contract_error("negative form degree");
    }
    BinaryForm(int degree, std::vector<K> coeffs)
        : deg_(degree), c_(std::move(coeffs)) {
        if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
            throw contract_error("coefficient list does not match degree");
    }

    int degree() const { return deg_; }
    const K& coeff(int i) const { return c_.at(i); }
    K& coeff(int i) { return c_.at(i); }
    const std::vector<K>& coeffs() const { return c_; }

    bool is_zero_form() const {
        for (const K& c : c_)
            if (!is_zero(c)) return false;
        return true;
    }

    /// multiplicity of x2 as a factor (= multiplicity of the root (1:0))
    int x2_multiplicity() const {
        for (int i = 0; i <= deg_; ++i)
            if (!is_zero(c_[i])) return i;
        return deg_ + 1; // zero form
    }

    K eval(const K& p1, const K& p2) const {
        K one = unit_or_zero();
        if (is_zero(one)) return K{};
        std::vector<K> pow1(deg_ + 1), pow2(deg_ + 1);
        pow1[0] = one;
        pow2[0] = one;
        for (int k = 1; k <= deg_; ++k) {
            pow1[k] = pow1[k - 1] * p1;
            pow2[k] = pow2[k - 1] * p2;
        }
        K acc{};
        for (int i = 0; i <= deg_; ++i) {
            if (is_zero(c_[i])) continue;
            acc += c_[i] * pow1[deg_ - i] * pow2[i];
        }
        return acc;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        a.require_same_degree(b);
        std::vector<K> r(a.c_);
        for (int i = 0; i <= a.deg_; ++i) r[i] = r[i] + b.c_[i];
        return BinaryForm(a.deg_, std::move(r));
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        a.require_same_degree(b);
        std::vector<K> r(a.c_);
        for (int i = 0; i <= a.deg_; ++i) r[i] = r[i] - b.c_[i];
        return BinaryForm(a.deg_, std::move(r));
    }
    BinaryForm operator-() const {
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return BinaryForm(deg_, std::move(r));
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        std::vector<K> r(a.deg_ + b.deg_ + 1, K{});
        for (int i = 0; i <= a.deg_; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; j <= b.deg_; ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return BinaryForm(a.deg_ + b.deg_, std::move(r));
    }
    friend BinaryForm operator*(const K& s, const BinaryForm& f) {
        std::vector<K> r(f.c_);
        for (K& c : r) c = s * c;
        return BinaryForm(f.deg_, std::move(r));
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) {
        return !(a == b);
    }

    /// Substitution x -> x*M for the row vector x = (x1, x2):
    /// x1 -> M.a*x1 + M.c*x2,  x2 -> M.b*x1 + M.d*x2.
    BinaryForm substitute(const Mat2<K>& m) const {
        if (is_zero_form()) return *this;
        BinaryForm l1(1, {m.a, m.c});
        BinaryForm l2(1, {m.b, m.d});
        K one = unit_or_zero();
        std::vector<BinaryForm> p1(deg_ + 1, BinaryForm(0)),
            p2(deg_ + 1, BinaryForm(0));
        p1[0] = BinaryForm(0, {one});
        p2[0] = p1[0];
        for (int k = 1; k <= deg_; ++k) {
            p1[k] = p1[k - 1] * l1;
            p2[k] = p2[k - 1] * l2;
        }
        BinaryForm acc(deg_);
        for (int i = 0; i <= deg_; ++i) {
            if (is_zero(c_[i])) continue;
            acc = acc + c_[i] * (p1[deg_ - i] * p2[i]);
        }
        return acc;
    }

    /// (df/dx1, df/dx2); requires degree >= 1.
    std::pair<BinaryForm, BinaryForm> partials() const {
        if (deg_ < 1) throw contract_error("partials need degree >= 1");
        BinaryForm d1(deg_ - 1), d2(deg_ - 1);
        for (int i = 0; i <= deg_; ++i) {
            if (is_zero(c_[i])) continue;
            int e1 = deg_ - i, e2 = i;
            if (e1 > 0) d1.c_[i] += ring_of_int(e1, c_[i]) * c_[i];
            if (e2 > 0) d2.c_[i - 1] += ring_of_int(e2, c_[i]) * c_[i];
        }
        return {d1, d2};
    }

    /// some multiplicative unit of K, or K{} for the zero form
    K unit_or_zero() const {
        for (const K& c : c_)
            if (!is_zero(c)) return ring_one(c);
        return K{};
    }

  private:
    void require_same_degree(const BinaryForm& o) const {
        if (deg_ != o.deg_)
            throw contract_error("binary form degree mismatch");
    }

    int deg_;
    std::vector<K> c_;
};

template <class K>
bool is_zero(const BinaryForm<K>& f) {
    return f.is_zero_form();
}

/// f(x1, 1) with coefficients ascending in x1.
template <class K>
UPoly<K> dehomogenize_x2(const BinaryForm<K>& f) {
    std::vector<K> c(f.degree() + 1, K{});
    for (int i = 0; i <= f.degree(); ++i) c[f.degree() - i] = f.coeff(i);
    return UPoly<K>(std::move(c));
}

/// Form of degree deg(p) whose restriction to x2 = 1 is p.
template <class K>
BinaryForm<K> homogenize(const UPoly<K>& p) {
    if (p.is_zero_poly()) return BinaryForm<K>(0);
    int d = p.degree();
    BinaryForm<K> f(d);
    for (int k = 0; k <= d; ++k) f.coeff(d - k) = p[k];
    return f;
}

/// gcd of binary forms over a field: nonconstant iff the forms share a
/// projective zero over the algebraic closure. Zero inputs are skipped;
/// all-zero input is a degenerate-input error. The result divides every
/// input, is monic in its leading nonzero coefficient, and the shared
/// power of x2 (lost by dehomogenizing at x2 = 1) is tracked explicitly.
template <class K>
BinaryForm<K> binary_gcd(const std::vector<BinaryForm<K>>& forms) {
    std::vector<const BinaryForm<K>*> nz;
    for (const auto& f : forms)
        if (!f.is_zero_form()) nz.push_back(&f);
    if (nz.empty()) throw domain_error("gcd of all-zero forms");

    int e2 = nz[0]->x2_multiplicity();
    UPoly<K> g = dehomogenize_x2(*nz[0]);
    for (std::size_t i = 1; i < nz.size(); ++i) {
        e2 = std::min(e2, nz[i]->x2_multiplicity());
        g = gcd(g, dehomogenize_x2(*nz[i]));
        if (g.degree() == 0 && e2 == 0) break;
    }
    BinaryForm<K> core = homogenize(field_inv(g.leading()) * g);
    if (e2 == 0) return core;
    BinaryForm<K> x2pow(e2);
    x2pow.coeff(e2) = ring_one(g.leading());
    return x2pow * core;
}

template <class K>
BinaryForm<K> binary_gcd(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    return binary_gcd(std::vector<BinaryForm<K>>{a, b});
}

/// Exact division of homogeneous forms over a field; throws if not exact.
template <class K>
BinaryForm<K> exact_div(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (g.is_zero_form()) throw contract_error("form division by zero");
    int dq = f.degree() - g.degree();
    if (f.is_zero_form()) {
        if (dq < 0) throw domain_error("form division is not exact");
        return BinaryForm<K>(dq);
    }
    if (g.x2_multiplicity() > f.x2_multiplicity())
        throw domain_error("form division is not exact");
    auto [q, r] = divmod(dehomogenize_x2(f), dehomogenize_x2(g));
    if (!r.is_zero_poly()) throw domain_error("form division is not exact");
    BinaryForm<K> out(dq);
    for (int k = 0; k <= q.degree(); ++k) out.coeff(dq - k) = q[k];
    return out;
}

/// Discriminant of a binary cubic a*x1^3 + b*x1^2x2 + c*x1x2^2 + d*x2^3:
/// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2. Vanishes exactly when the
/// form has a multiple projective root (for nonzero forms).
template <class K>
K cubic_discriminant(const BinaryForm<K>& f) {
    if (f.degree() != 3) throw contract_error("discriminant needs degree 3");
    if (f.is_zero_form()) return K{};
    const K &a = f.coeff(0), &b = f.coeff(1), &c = f.coeff(2),
            &d = f.coeff(3);
    K ex = f.unit_or_zero();
    auto n = [&](long k) { return ring_of_int(k, ex); };
    return n(18) * a * b * c * d - n(4) * b * b * b * d + b * b * c * c -
           n(4) * a * c * c * c - n(27) * a * a * d * d;
}

/// Determinant over a commutative ring by Laplace expansion with
/// memoization on column subsets; fine for the sizes used here (<= ~12).
template <class K>
K det_dense(const std::vector<K>& a, int n) {
    if (n <= 0 || n > 20) throw contract_error("det_dense size out of range");
    K one{};
    bool found = false;
    for (const K& t : a)
        if (!is_zero(t)) {
            one = ring_one(t);
            found = true;
            break;
        }
    if (!found) return K{};

    std::vector<K> memo(std::size_t(1) << n, K{});
    std::vector<char> seen(std::size_t(1) << n, 0);

    // det over (rows 0..popcount(mask)-1) x (columns in mask), expanding
    // along the last row of the block
    auto rec = [&](auto&& self, unsigned mask) -> K {
        if (mask == 0) return one;
        if (seen[mask]) return memo[mask];
        int row = __builtin_popcount(mask) - 1;
        K acc{};
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const K& entry = a[std::size_t(row) * n + c];
            if (!is_zero(entry)) {
                K sub = self(self, mask & ~(1u << c));
                K term = entry * sub;
                if ((row + pos) % 2 == 0)
                    acc += term;
                else
                    acc = acc - term;
            }
            ++pos;
        }
        seen[mask] = 1;
        memo[mask] = acc;
        return acc;
    };
    unsigned full = (n >= 32) ? ~0u : ((1u << n) - 1);
    return rec(rec, full);
}

/// Sylvester resultant of two binary forms taken at their declared degrees;
/// zero iff they share a projective root over the closure (or one is the
/// zero form). Works over any commutative ring.
template <class K>
K resultant(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) {
        K u = f.unit_or_zero();
        if (is_zero(u)) u = g.unit_or_zero();
        if (is_zero(u)) return K{};
        return ring_one(u);
    }
    if (m == 0 || n == 0) {
        K base = (m == 0) ? f.coeff(0) : g.coeff(0);
        int e = (m == 0) ? n : m;
        if (is_zero(base)) return K{};
        K acc = base;
        for (int i = 1; i < e; ++i) acc = acc * base;
        return acc;
    }
    int sz = m + n;
    std::vector<K> mat(std::size_t(sz) * sz, K{});
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) mat[std::size_t(r) * sz + r + j] = f.coeff(j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            mat[std::size_t(n + r) * sz + r + j] = g.coeff(j);
    return det_dense(mat, sz);
}

} // namespace trig
