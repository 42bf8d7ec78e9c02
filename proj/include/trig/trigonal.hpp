#pragma once

#include <array>
#include <vector>

#include "trig/binary_form.hpp"
#include "trig/cubic_lab.hpp"
#include "trig/error.hpp"
#include "trig/upoly.hpp"

namespace trig {

/// Candidate trigonal curve: splitting type (m, n) with m <= n, and the
/// four coefficient forms (phi0..phi3) in base coordinates (t0, t1) of
/// degrees (2m-n, m, n, 2n-m). A negative prescribed degree forces the
/// zero form (stored with degree 0).
template <class K>
struct TrigonalDatum {
    long m, n;
    std::array<BinaryForm<K>, 4> phi;

    TrigonalDatum(long m_, long n_, std::array<BinaryForm<K>, 4> phi_)
        : m(m_), n(n_), phi(std::move(phi_)) {
        if (m < 0 || m > n) throw contract_error("need 0 <= m <= n");
        std::array<long, 4> degs = degrees();
        for (int i = 0; i < 4; ++i) {
            if (degs[i] < 0) {
                if (!phi[i].is_zero_form())
                    throw contract_error(
                        "phi" + std::to_string(i) +
                        " has negative prescribed degree and must vanish");
                phi[i] = BinaryForm<K>(0);
            } else if (phi[i].degree() != degs[i]) {
                if (phi[i].is_zero_form()) {
                    phi[i] = BinaryForm<K>(static_cast<int>(degs[i]));
                } else {
                    throw contract_error(
                        "phi" + std::to_string(i) + " must have degree " +
                        std::to_string(degs[i]));
                }
            }
        }
    }

    std::array<long, 4> degrees() const {
        return {2 * m - n, m, n, 2 * n - m};
    }

    long genus() const { return m + n - 2; }

    bool is_zero_section() const {
        for (const auto& p : phi)
            if (!p.is_zero_form()) return false;
        return true;
    }
};

template <class K>
struct SingularPoint {
    ProjPoint<K> base;
    std::vector<ProjPoint<K>> fiber; // rational fiber witnesses, lex order
};

template <class K>
struct SmoothVerdict {
    bool smooth = true;
    bool everywhere_singular = false;
    std::vector<SingularPoint<K>> points; // rational singular points
};

/// Result of scanning one affine chart of the base line.
template <class K>
struct ChartScan {
    bool everywhere = false;       // singular over every base point
    bool closure_singular = false; // singular point exists over k-bar
    std::vector<K> rational_ts;    // rational singular parameters, sorted
};

/// Chart-level core: given the three binary x-forms (f_x1, f_x2, f_t)
/// with k[t] coefficients, decide exactly (over the algebraic closure)
/// for which t they share a projective x-zero.
template <class K>
ChartScan<K> scan_chart(const BinaryForm<UPoly<K>>& fx1,
                        const BinaryForm<UPoly<K>>& fx2,
                        const BinaryForm<UPoly<K>>& ft);

/// Full smoothness check: both base charts, first-order data from the
/// t-derivative, singularity over a base point q iff the dual cubic
/// (fiber at q) + eps (t-derivative at q) lies in the W locus. Rational
/// singular points are listed with fiber witnesses, chart 0 first.
template <class K>
SmoothVerdict<K> smooth_check(const TrigonalDatum<K>& datum);

/// The dual cubic over a rational point t of chart 0 (t0 = 1); pointwise
/// view used for cross-checks against the global scan.
template <class K>
DualCubic<K> restrict_to_base_point(const TrigonalDatum<K>& datum,
                                    const K& t);

} // namespace trig

#include "trig/trigonal_impl.hpp"
