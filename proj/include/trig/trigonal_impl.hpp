#pragma once

// Implementation of the global smoothness scan. Elimination strategy per
// chart, everything exact over k[t]:
//   * identical common factor of (f_x1, f_x2, f_t) over k(t)  ->  singular
//     over every base point (primitive positive-degree divisor specializes
//     to a positive-degree form at every t);
//   * otherwise the auxiliary resultant R(t,z) = Res_x(f_x1 + z f_x2, f_t)
//     vanishes identically in z at exactly the t where all three share an
//     x-root, provided f_t(t) is not the zero form; the f_t(t) = 0 locus
//     is handled by Res_x(f_x1, f_x2). Pairwise resultants alone would
//     accept t where the pairwise common roots differ.

#include <algorithm>

namespace trig {

namespace tridetail {

/// t-content: gcd in k[t] of the x-coefficients.
template <class K>
UPoly<K> content_t(const std::vector<UPoly<K>>& coeffs) {
    UPoly<K> c;
    for (const auto& p : coeffs) c = gcd(c, p);
    return c;
}

template <class K>
UPoly<UPoly<K>> primitive_part(const UPoly<UPoly<K>>& p) {
    if (p.is_zero_poly()) return p;
    UPoly<K> c = content_t<K>(p.coeffs());
    if (c.degree() <= 0) return p;
    std::vector<UPoly<K>> out;
    for (int i = 0; i <= p.degree(); ++i) {
        auto [q, r] = divmod(p[i], c);
        if (!r.is_zero_poly())
            throw contract_error("content division failed");
        out.push_back(q);
    }
    return UPoly<UPoly<K>>(std::move(out));
}

/// Pseudo-division over k[t]: returns rem(lc(b)^(da-db+1) * a, b), which
/// stays inside k[t][x].
template <class K>
UPoly<UPoly<K>> pseudo_rem(const UPoly<UPoly<K>>& a,
                           const UPoly<UPoly<K>>& b) {
    int da = a.degree(), db = b.degree();
    if (db < 0) throw contract_error("pseudo-division by zero");
    if (da < db) return a;
    const UPoly<K>& lb = b[db];
    std::vector<UPoly<K>> rem;
    for (int i = 0; i <= da; ++i) rem.push_back(a[i]);
    for (int i = da; i >= db; --i) {
        // scale the remainder so the leading term divides exactly
        UPoly<K> top = rem[i];
        for (int j = 0; j <= i; ++j) rem[j] = lb * rem[j];
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = rem[i - db + j] - top * b[j];
    }
    rem.resize(db);
    return UPoly<UPoly<K>>(std::move(rem));
}

template <class K>
UPoly<UPoly<K>> lift_dehom(const BinaryForm<UPoly<K>>& f) {
    std::vector<UPoly<K>> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c[f.degree() - i] = f.coeff(i);
    return UPoly<UPoly<K>>(std::move(c));
}

template <class K>
BinaryForm<UPoly<K>> rehom(const UPoly<UPoly<K>>& p) {
    if (p.is_zero_poly()) return BinaryForm<UPoly<K>>(0);
    int d = p.degree();
    BinaryForm<UPoly<K>> f(d);
    for (int k = 0; k <= d; ++k) f.coeff(d - k) = p[k];
    return f;
}

/// gcd over k(t) of binary x-forms, primitive over k[t]; zero forms are
/// skipped (both zero is a contract error).
template <class K>
BinaryForm<UPoly<K>> gcd_over_kt(const BinaryForm<UPoly<K>>& a,
                                 const BinaryForm<UPoly<K>>& b) {
    if (a.is_zero_form()) {
        if (b.is_zero_form())
            throw contract_error("gcd of zero forms over k(t)");
        return b;
    }
    if (b.is_zero_form()) return a;

    int e2 = std::min(a.x2_multiplicity(), b.x2_multiplicity());
    UPoly<UPoly<K>> pa = primitive_part(lift_dehom(a));
    UPoly<UPoly<K>> pb = primitive_part(lift_dehom(b));
    if (pa.degree() < pb.degree()) std::swap(pa, pb);
    while (!pb.is_zero_poly()) {
        UPoly<UPoly<K>> r = primitive_part(pseudo_rem(pa, pb));
        pa = pb;
        pb = r;
    }
    pa = primitive_part(pa);
    BinaryForm<UPoly<K>> core = rehom(pa);
    if (e2 > 0) {
        K unit{};
        for (const auto& c : core.coeffs())
            for (const K& x : c.coeffs())
                if (!is_zero(x)) {
                    unit = ring_one(x);
                    goto found;
                }
    found:
        BinaryForm<UPoly<K>> x2pow(e2);
        x2pow.coeff(e2) = UPoly<K>(unit);
        core = x2pow * core;
    }
    return core;
}

/// exact quotient in k[t]
template <class K>
UPoly<K> exact_quot(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero_poly()) throw contract_error("inexact k[t] division");
    return q;
}

} // namespace tridetail

template <class K>
ChartScan<K> scan_chart(const BinaryForm<UPoly<K>>& fx1,
                        const BinaryForm<UPoly<K>>& fx2,
                        const BinaryForm<UPoly<K>>& ft) {
    using tridetail::gcd_over_kt;
    ChartScan<K> out;

    const bool a_zero = fx1.is_zero_form();
    const bool b_zero = fx2.is_zero_form();
    if (a_zero && b_zero)
        throw contract_error("scan_chart needs a nonzero fiber family");

    // Identical common factor over k(t) of all three forms -> singular
    // over every base point.
    BinaryForm<UPoly<K>> h = gcd_over_kt(fx1, fx2);
    BinaryForm<UPoly<K>> hh =
        ft.is_zero_form() ? h : gcd_over_kt(h, ft);
    if (hh.degree() >= 1 && !hh.is_zero_form()) {
        out.everywhere = true;
        out.closure_singular = true;
        return out;
    }

    UPoly<K> r_ab = resultant(fx1, fx2); // in k[t]

    if (ft.is_zero_form()) {
        // condition is just a common root of the two partials
        if (r_ab.is_zero_poly()) {
            out.everywhere = true; // can't happen once hh was constant
            out.closure_singular = true;
            return out;
        }
        UPoly<K> s = squarefree_part(r_ab);
        out.closure_singular = s.degree() >= 1;
        for (const K& r : field_roots(s)) out.rational_ts.push_back(r);
        return out;
    }

    // z-trick: R(t,z) = Res_x(fx1 + z fx2, ft) over (k[t])[z]
    using KT = UPoly<K>;
    using KTZ = UPoly<KT>; // z outer, t inner
    BinaryForm<KTZ> combo(2);
    for (int i = 0; i <= 2; ++i)
        combo.coeff(i) = KTZ(std::vector<KT>{fx1.coeff(i), fx2.coeff(i)});
    BinaryForm<KTZ> ft_lift(3);
    for (int i = 0; i <= 3; ++i)
        ft_lift.coeff(i) = KTZ(std::vector<KT>{ft.coeff(i)});
    KTZ big = resultant(combo, ft_lift);

    // gcd over k[t] of all z-coefficients
    UPoly<K> s1;
    for (int j = 0; j <= big.degree(); ++j) s1 = gcd(s1, big[j]);

    if (s1.is_zero_poly()) {
        // identically zero resultant: common root for generic t
        out.everywhere = true;
        out.closure_singular = true;
        return out;
    }

    UPoly<K> p = squarefree_part(s1);
    // the t where ft(t) is the zero form: content locus
    UPoly<K> gamma = tridetail::content_t<K>(ft.coeffs());
    UPoly<K> cond_locus =
        gamma.degree() >= 1 ? gcd(p, squarefree_part(gamma)) : UPoly<K>();
    UPoly<K> good = p;
    if (cond_locus.degree() >= 1) {
        good = tridetail::exact_quot(p, cond_locus);
        // among the ft==0 points, singular iff the partials share a root
        UPoly<K> keep =
            r_ab.is_zero_poly() ? cond_locus : gcd(cond_locus, r_ab);
        good = good * keep;
    }

    out.closure_singular = good.degree() >= 1;
    if (out.closure_singular) {
        UPoly<K> s = squarefree_part(good);
        for (const K& r : field_roots(s)) out.rational_ts.push_back(r);
    }
    return out;
}

namespace tridetail {

/// chart representative: phi_i dehomogenized, plus its t-derivative
template <class K>
struct ChartForms {
    BinaryForm<UPoly<K>> f;  // x-degree 3, coefficients in k[t]
    BinaryForm<UPoly<K>> fx1;
    BinaryForm<UPoly<K>> fx2;
    BinaryForm<UPoly<K>> ft;
};

template <class K>
ChartForms<K> chart_forms(const TrigonalDatum<K>& datum, int chart) {
    ChartForms<K> out{BinaryForm<UPoly<K>>(3), BinaryForm<UPoly<K>>(2),
                      BinaryForm<UPoly<K>>(2), BinaryForm<UPoly<K>>(3)};
    for (int i = 0; i < 4; ++i) {
        const BinaryForm<K>& p = datum.phi[i];
        std::vector<K> c(p.degree() + 1);
        if (chart == 0) {
            // phi(1, t): ascending coefficients are exactly coeff(0..d)
            for (int j = 0; j <= p.degree(); ++j) c[j] = p.coeff(j);
        } else {
            // phi(s, 1): reversed
            for (int j = 0; j <= p.degree(); ++j)
                c[p.degree() - j] = p.coeff(j);
        }
        out.f.coeff(i) = UPoly<K>(std::move(c));
    }
    auto [d1, d2] = out.f.partials();
    out.fx1 = d1;
    out.fx2 = d2;
    for (int i = 0; i <= 3; ++i)
        out.ft.coeff(i) = out.f.coeff(i).derivative();
    return out;
}

template <class K>
DualCubic<K> fiber_at(const ChartForms<K>& forms, const K& t) {
    BinaryForm<K> f(3), g(3);
    for (int i = 0; i <= 3; ++i) {
        f.coeff(i) = forms.f.coeff(i).eval(t);
        g.coeff(i) = forms.ft.coeff(i).eval(t);
    }
    return DualCubic<K>(std::move(f), std::move(g));
}

} // namespace tridetail

template <class K>
DualCubic<K> restrict_to_base_point(const TrigonalDatum<K>& datum,
                                    const K& t) {
    auto forms = tridetail::chart_forms(datum, 0);
    return tridetail::fiber_at(forms, t);
}

template <class K>
SmoothVerdict<K> smooth_check(const TrigonalDatum<K>& datum) {
    if (datum.is_zero_section())
        throw domain_error(
            "the zero section is non-Gorenstein over every base point");

    SmoothVerdict<K> out;
    K one{};
    for (const auto& p : datum.phi) {
        K u = p.unit_or_zero();
        if (!is_zero(u)) {
            one = u;
            break;
        }
    }

    auto forms0 = tridetail::chart_forms(datum, 0);
    auto forms1 = tridetail::chart_forms(datum, 1);
    ChartScan<K> scan0 = scan_chart(forms0.fx1, forms0.fx2, forms0.ft);

    if (scan0.everywhere) {
        out.smooth = false;
        out.everywhere_singular = true;
        return out;
    }

    out.smooth = !scan0.closure_singular;
    for (const K& t : scan0.rational_ts) {
        SingularPoint<K> pt;
        pt.base = ProjPoint<K>(one, t); // (1 : t)
        WVerdict<K> w = in_W(tridetail::fiber_at(forms0, t));
        pt.fiber = w.witnesses;
        out.points.push_back(std::move(pt));
    }

    // chart 1 contributes only the point at infinity; everything with
    // s != 0 is a chart-0 point already handled
    ChartScan<K> scan1 = scan_chart(forms1.fx1, forms1.fx2, forms1.ft);
    if (scan1.everywhere) {
        out.smooth = false;
        out.everywhere_singular = true;
        out.points.clear();
        return out;
    }
    if (scan1.closure_singular) out.smooth = false;
    for (const K& s : scan1.rational_ts) {
        if (!is_zero(s)) continue;
        SingularPoint<K> pt;
        pt.base = ProjPoint<K>(K{}, one); // (0 : 1)
        WVerdict<K> w = in_W(tridetail::fiber_at(forms1, s));
        pt.fiber = w.witnesses;
        out.points.push_back(std::move(pt));
    }
    return out;
}

} // namespace trig
