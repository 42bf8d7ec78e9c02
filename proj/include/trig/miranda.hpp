#pragma once

#include <array>
#include <string>

#include "trig/binary_form.hpp"
#include "trig/error.hpp"
#include "trig/fp.hpp"
#include "trig/mpoly.hpp"

namespace trig {

/// Division by a small positive integer, available in every coefficient
/// ring used here (char 0 or p > 3).
inline Rat div_small(const Rat& x, long n) { return x / Rat(n); }
inline Fp div_small(const Fp& x, long n) {
    if (x.is_zero()) return x;
    return x * field_inv(ring_of_int(n, x));
}
template <class C>
MPoly<C> div_small(const MPoly<C>& x, long n) {
    return x.template map_coefficients<C>(
        [&](const C& c) { return div_small(c, n); });
}

/// Commutative rank-3 algebra on a trace-zero basis (1, omega, theta),
/// stored as the products expanded in that basis. Coordinates are
/// (unit, omega, theta).
template <class K>
struct CubicAlgebra {
    using Vec3 = std::array<K, 3>;
    Vec3 omega_sq;
    Vec3 omega_theta;
    Vec3 theta_sq;

    /// multiply two elements given by coordinates
    Vec3 mul(const Vec3& x, const Vec3& y) const {
        // basis products: 1*1=1, 1*w=w, 1*t=t, w*w, w*t, t*t from the table
        Vec3 r{x[0] * y[0], x[0] * y[1] + x[1] * y[0],
               x[0] * y[2] + x[2] * y[0]};
        K ww = x[1] * y[1];
        K wt = x[1] * y[2] + x[2] * y[1];
        K tt = x[2] * y[2];
        for (int i = 0; i < 3; ++i)
            r[i] += ww * omega_sq[i] + wt * omega_theta[i] + tt * theta_sq[i];
        return r;
    }

    K trace_omega() const { return omega_sq[1] + omega_theta[2]; }
    K trace_theta() const { return omega_theta[1] + theta_sq[2]; }

    bool is_associative() const {
        Vec3 basis[2] = {Vec3{K{}, unit(), K{}}, Vec3{K{}, K{}, unit()}};
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    Vec3 l = mul(mul(x, y), z);
                    Vec3 r = mul(x, mul(y, z));
                    for (int i = 0; i < 3; ++i)
                        if (!is_zero(l[i] - r[i])) return false;
                }
        return true;
    }

    /// Gram determinant of the trace form on (1, omega, theta).
    K trace_form_det() const {
        // tr(1)=3; tr(omega)=tr(theta)=0 for valid tables; tr of products
        // of trace-zero elements is 3 * (unit component)
        K three = ring_of_zero_safe(3);
        K t_ww = ring_of_zero_safe(3) * omega_sq[0];
        K t_wt = ring_of_zero_safe(3) * omega_theta[0];
        K t_tt = ring_of_zero_safe(3) * theta_sq[0];
        // det [[3,0,0],[0,t_ww,t_wt],[0,t_wt,t_tt]]
        return three * (t_ww * t_tt - t_wt * t_wt);
    }

    K unit() const {
        for (const auto& v : {omega_sq, omega_theta, theta_sq})
            for (const K& c : v)
                if (!is_zero(c)) return ring_one(c);
        return K{}; // square-zero algebra over a ring without exemplar
    }

    K ring_of_zero_safe(long n) const {
        K u = unit();
        if (is_zero(u)) return K{};
        return ring_of_int(n, u);
    }
};

/// Structure constants of the cubic algebra attached to the binary cubic
/// f = a x1^3 + b x1^2 x2 + c x1 x2^2 + d x2^3, already shifted to the
/// trace-zero basis (char != 3):
///   omega^2    = (2b^2/9 - 2ac/3) + (b/3) omega - a theta
///   omega*theta= (bc/9 - ad)      + (c/3) omega - (b/3) theta
///   theta^2    = (2c^2/9 - 2bd/3) + d omega     - (c/3) theta
/// The zero form yields the square-zero algebra.
template <class K>
CubicAlgebra<K> form_to_algebra(const BinaryForm<K>& f) {
    if (f.degree() != 3)
        throw contract_error("form_to_algebra needs a binary cubic");
    const K &a = f.coeff(0), &b = f.coeff(1), &c = f.coeff(2),
            &d = f.coeff(3);
    CubicAlgebra<K> alg;
    auto third = [&](const K& x) { return div_small(x, 3); };
    auto ninth = [&](const K& x) { return div_small(x, 9); };
    K two_b2 = b * b + b * b;
    K two_ac = a * c + a * c;
    K two_c2 = c * c + c * c;
    K two_bd = b * d + b * d;
    alg.omega_sq = {ninth(two_b2) - third(two_ac), third(b), -a};
    alg.omega_theta = {ninth(b * c) - a * d, third(c), -third(b)};
    alg.theta_sq = {ninth(two_c2) - third(two_bd), d, -third(c)};
    return alg;
}

/// Inverse direction: read the cubic off the multiplication table through
/// the trace pairing and the trivialization omega ^ theta -> 1. Exact
/// inverse of form_to_algebra (normalization constant 1).
template <class K>
BinaryForm<K> algebra_to_form(const CubicAlgebra<K>& alg) {
    if (!is_zero(alg.trace_omega()) || !is_zero(alg.trace_theta()))
        throw contract_error("algebra basis is not trace-zero");
    if (!alg.is_associative())
        throw contract_error("structure constants are not associative");
    K a = -alg.omega_sq[2];
    K b = alg.omega_sq[1] + alg.omega_sq[1] + alg.omega_sq[1];
    K c = alg.omega_theta[1] + alg.omega_theta[1] + alg.omega_theta[1];
    K d = alg.theta_sq[1];
    return BinaryForm<K>(3, {a, b, c, d});
}

enum class FiberType { etale, node_like, cusp_like, triple_point,
                       non_gorenstein };

std::string to_string(FiberType t);

/// Pointwise classification of the cover's fiber at a binary cubic:
/// only the multiplicity pattern is visible here, so cusp_like is never
/// produced (the tag exists for datum-level reporting).
template <class K>
FiberType fiber_type(const BinaryForm<K>& f) {
    if (f.degree() != 3)
        throw contract_error("fiber_type needs a binary cubic");
    if (f.is_zero_form()) return FiberType::non_gorenstein;
    if (!is_zero(cubic_discriminant(f))) return FiberType::etale;
    auto [d1, d2] = f.partials();
    BinaryForm<K> h =
        binary_gcd(std::vector<BinaryForm<K>>{f, d1, d2});
    return h.degree() == 1 ? FiberType::node_like : FiberType::triple_point;
}

struct GenusInfo {
    long g;
    long maroni;
    long stratum_codim;
    bool in_vhat;
};

/// (m, n) -> genus m+n-2, Maroni invariant m-2, stratum codimension
/// n-m-1 (0 on the balanced open stratum), and whether both summands are
/// in the globally-generated range 3m, 3n >= g+2.
inline GenusInfo genus_and_maroni(long m, long n) {
    if (m < 0 || m > n) throw contract_error("need 0 <= m <= n");
    GenusInfo info;
    info.g = m + n - 2;
    info.maroni = m - 2;
    info.stratum_codim = (m < n) ? (n - m - 1) : 0;
    info.in_vhat = (3 * m >= info.g + 2) && (3 * n >= info.g + 2);
    return info;
}

} // namespace trig
