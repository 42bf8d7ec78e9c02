#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trig/binary_form.hpp"
#include "trig/dual.hpp"
#include "trig/matrix2.hpp"
#include "trig/roots.hpp"

namespace trig {

/// Conventions, fixed once for the whole toolkit: points are row vectors,
/// GL2 acts on forms by x -> xA (together with the det^{-1} twist) and on
/// points by p -> p A^{-1}.

/// Point of P^1 as a nonzero row vector (p1, p2), compared up to scalar.
template <class K>
struct ProjPoint {
    K p1{}, p2{};

    ProjPoint() = default;
    ProjPoint(K a, K b) : p1(std::move(a)), p2(std::move(b)) {
        if (is_zero(p1) && is_zero(p2))
            throw contract_error("projective point must be nonzero");
    }

    bool same_point(const ProjPoint& o) const {
        return is_zero(p1 * o.p2 - p2 * o.p1);
    }

    /// scale so the first nonzero coordinate is 1
    ProjPoint normalized() const {
        if (!is_zero(p1)) {
            K i = field_inv(p1);
            return ProjPoint(ring_one(p1), i * p2);
        }
        return ProjPoint(K{}, ring_one(p2));
    }

    ProjPoint acted(const Mat2<K>& a_inv) const {
        // p -> p * a_inv, for a_inv = A^{-1}
        return ProjPoint(p1 * a_inv.a + p2 * a_inv.c,
                         p1 * a_inv.b + p2 * a_inv.d);
    }

    std::string str() const {
        ProjPoint n = normalized();
        using trig::to_string;
        return "(" + to_string(n.p1) + ":" + to_string(n.p2) + ")";
    }
};

/// (1:0)-style lexicographic order on normalized coordinates:
/// (0:1) sorts before every (1:r), and (1:r) by increasing r.
template <class K>
bool proj_less(const ProjPoint<K>& a, const ProjPoint<K>& b) {
    ProjPoint<K> x = a.normalized(), y = b.normalized();
    bool xa = is_zero(x.p1), ya = is_zero(y.p1);
    if (xa != ya) return xa;
    if (xa && ya) return false;
    return field_less(x.p2, y.p2);
}

/// f + eps*g: a first-order family of binary cubics.
template <class K>
struct DualCubic {
    BinaryForm<K> f;
    BinaryForm<K> g;

    DualCubic() : f(3), g(3) {}
    DualCubic(BinaryForm<K> f_, BinaryForm<K> g_)
        : f(std::move(f_)), g(std::move(g_)) {
        if (f.degree() != 3 || g.degree() != 3)
            throw contract_error("dual cubic needs degree-3 forms");
    }

    friend bool operator==(const DualCubic& a, const DualCubic& b) {
        return a.f == b.f && a.g == b.g;
    }
};

/// (u, A + eps B) in the group G_m x| GL_2(k[eps]).
template <class K>
struct HgElement {
    K u;
    Mat2<K> a;
    Mat2<K> b;

    HgElement(K u_, Mat2<K> a_, Mat2<K> b_)
        : u(std::move(u_)), a(std::move(a_)), b(std::move(b_)) {
        if (is_zero(u)) throw contract_error("G_m part must be nonzero");
        if (is_zero(a.det())) throw contract_error("singular matrix part");
    }

    static HgElement identity(const K& exemplar) {
        K one = ring_one(exemplar);
        return HgElement(one, Mat2<K>::identity(exemplar), Mat2<K>{});
    }
};

/// (A, f) -> det(A)^{-1} f(xA).
template <class K>
BinaryForm<K> act_gl2(const Mat2<K>& a, const BinaryForm<K>& f) {
    K dt = a.det();
    if (is_zero(dt)) throw contract_error("act_gl2 needs invertible matrix");
    return field_inv(dt) * f.substitute(a);
}

/// Action of (u, A + eps B): scale the eps part by u, then apply the
/// GL_2(k[eps]) substitution-with-determinant-twist exactly over dual
/// numbers: det(A+eps B)^{-1} (f(xA) + eps (xB J_f(xA) + u g(xA))).
template <class K>
DualCubic<K> act_hg(const HgElement<K>& h, const DualCubic<K>& v) {
    using D = Dual<K>;
    BinaryForm<D> w(3);
    for (int i = 0; i <= 3; ++i)
        w.coeff(i) = D(v.f.coeff(i), h.u * v.g.coeff(i));
    Mat2<D> m(D(h.a.a, h.b.a), D(h.a.b, h.b.b), D(h.a.c, h.b.c),
              D(h.a.d, h.b.d));
    D dt = m.det();
    BinaryForm<D> out = field_inv(dt) * w.substitute(m);
    BinaryForm<K> f2(3), g2(3);
    for (int i = 0; i <= 3; ++i) {
        f2.coeff(i) = out.coeff(i).a;
        g2.coeff(i) = out.coeff(i).b;
    }
    return DualCubic<K>(std::move(f2), std::move(g2));
}

/// Group law: (u1, M1)(u2, M2) = (u1 u2, M1 * (A2 + eps u1 B2)),
/// i.e. AA' on the A part and B A' + u1 A B' on the eps part.
template <class K>
HgElement<K> hg_multiply(const HgElement<K>& h1, const HgElement<K>& h2) {
    Mat2<K> a = h1.a * h2.a;
    Mat2<K> b = h1.b * h2.a + (h1.u * (h1.a * h2.b));
    return HgElement<K>(h1.u * h2.u, std::move(a), std::move(b));
}

template <class K>
HgElement<K> hg_inverse(const HgElement<K>& h) {
    K ui = field_inv(h.u);
    Mat2<K> ai = h.a.inverse();
    Mat2<K> bi = -(ui * (ai * h.b * ai));
    return HgElement<K>(ui, std::move(ai), std::move(bi));
}

/// J_f = (df/dx1, df/dx2); Euler: deg(f)*f = x1 d1f + x2 d2f.
template <class K>
std::pair<BinaryForm<K>, BinaryForm<K>> jacobian(const BinaryForm<K>& f) {
    return f.partials();
}

/// beta(p, f + eps g) = (g(p), d1f(p), d2f(p)).
template <class K>
std::array<K, 3> beta(const ProjPoint<K>& p, const DualCubic<K>& v) {
    auto [d1, d2] = v.f.partials();
    return {v.g.eval(p.p1, p.p2), d1.eval(p.p1, p.p2), d2.eval(p.p1, p.p2)};
}

template <class K>
struct WVerdict {
    bool in_w = false;
    std::optional<ProjPoint<K>> witness;   // first in lex order, if rational
    std::vector<ProjPoint<K>> witnesses;   // all rational ones, lex order
};

/// Rational projective roots of a binary form, in lex order:
/// (0:1) if x1 divides the form, then (1:r) for the rational roots r of
/// f(1, y) in y = x2/x1.
template <class K>
std::vector<ProjPoint<K>> rational_roots(const BinaryForm<K>& h) {
    std::vector<ProjPoint<K>> pts;
    if (h.is_zero_form() || h.degree() == 0) return pts;
    K one = h.unit_or_zero();
    if (is_zero(h.coeff(h.degree()))) // coefficient of x2^d
        pts.emplace_back(K{}, one);
    // f(1, y): ascending coefficients are exactly coeff(0..d)
    UPoly<K> q(std::vector<K>(h.coeffs()));
    if (!q.is_zero_poly()) {
        for (const K& r : field_roots(q)) pts.emplace_back(one, r);
    }
    std::sort(pts.begin(), pts.end(),
              [](const ProjPoint<K>& a, const ProjPoint<K>& b) {
                  return proj_less(a, b);
              });
    return pts;
}

/// Membership in the singular locus: true iff f = 0, or f's two partials
/// and g share a projective zero over the algebraic closure (decided by
/// gcd degrees; rational witnesses reported when they exist). By the Euler
/// identity J_f(p) = 0 already forces f(p) = 0, so f itself is not tested.
template <class K>
WVerdict<K> in_W(const DualCubic<K>& v) {
    WVerdict<K> out;
    if (v.f.is_zero_form()) {
        out.in_w = true;
        if (!v.g.is_zero_form()) {
            out.witnesses = rational_roots(v.g);
        } else {
            // every point of the fiber is singular; report the lex-first one
            out.witnesses.push_back(
                ProjPoint<K>(K{}, ring_one(v.f.coeff(0))));
        }
        if (!out.witnesses.empty()) out.witness = out.witnesses.front();
        return out;
    }
    auto [d1, d2] = v.f.partials();
    BinaryForm<K> h = binary_gcd(std::vector<BinaryForm<K>>{d1, d2});
    BinaryForm<K> common =
        v.g.is_zero_form()
            ? h
            : binary_gcd(std::vector<BinaryForm<K>>{h, v.g});
    out.in_w = common.degree() >= 1 && !common.is_zero_form();
    if (out.in_w) {
        out.witnesses = rational_roots(common);
        if (!out.witnesses.empty()) out.witness = out.witnesses.front();
    }
    return out;
}

} // namespace trig
