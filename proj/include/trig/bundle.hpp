#pragma once

#include <map>
#include <vector>

#include "trig/binary_form.hpp"
#include "trig/error.hpp"
#include "trig/matrix.hpp"
#include "trig/rng.hpp"

namespace trig {

/// (r+d) x d matrix of degree-1 binary forms, presenting the cokernel of
/// O(-1)^d -> O^(r+d) on the projective line. Zero entries are allowed
/// (stored as degree-1 zero forms).
template <class K>
class LinearMatrix {
  public:
    LinearMatrix(int r, int d)
        : r_(r), d_(d),
          e_(static_cast<std::size_t>(r + d) * d, BinaryForm<K>(1)) {
        if (r < 1 || d < 1) throw contract_error("need r, d >= 1");
    }

    int r() const { return r_; }
    int d() const { return d_; }
    int rows() const { return r_ + d_; }
    int cols() const { return d_; }

    BinaryForm<K>& at(int i, int j) {
        return e_[static_cast<std::size_t>(i) * d_ + j];
    }
    const BinaryForm<K>& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * d_ + j];
    }

    void set(int i, int j, BinaryForm<K> f) {
        if (f.degree() != 1) throw contract_error("entries must be linear");
        at(i, j) = std::move(f);
    }

    /// row substitution by C (the coordinate action), then A * L * B^{-1}
    LinearMatrix acted(const Mat<K>& a, const Mat<K>& b_inv,
                       const Mat2<K>& c) const {
        if (a.rows() != rows() || a.cols() != rows() ||
            b_inv.rows() != cols() || b_inv.cols() != cols())
            throw contract_error("action size mismatch");
        LinearMatrix tmp(r_, d_);
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j)
                tmp.at(i, j) = at(i, j).substitute(c);
        LinearMatrix out(r_, d_);
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j) {
                BinaryForm<K> acc(1);
                for (int k = 0; k < rows(); ++k)
                    for (int l = 0; l < cols(); ++l)
                        acc = acc + (a.at(i, k) * b_inv.at(l, j)) *
                                        tmp.at(k, l);
                out.at(i, j) = acc;
            }
        return out;
    }

    /// evaluation at a point: plain scalar matrix
    Mat<K> eval(const K& p1, const K& p2) const {
        Mat<K> m(rows(), cols());
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j)
                m.at(i, j) = at(i, j).eval(p1, p2);
        return m;
    }

  private:
    int r_, d_;
    std::vector<BinaryForm<K>> e_;
};

namespace bundetail {

/// All d x d minors (row subsets), by Laplace expansion along the last
/// column with memoization on row subsets; used for d <= 8.
template <class K>
std::vector<BinaryForm<K>> minors_memo(const LinearMatrix<K>& l) {
    int n = l.rows(), d = l.cols();
    std::vector<BinaryForm<K>> memo(std::size_t(1) << n, BinaryForm<K>(0));
    std::vector<char> seen(std::size_t(1) << n, 0);
    // minor(mask) uses columns 0..popcount(mask)-1
    auto rec = [&](auto&& self, unsigned mask) -> BinaryForm<K> {
        int size = __builtin_popcount(mask);
        if (size == 0) return BinaryForm<K>(0); // handled by caller
        if (seen[mask]) return memo[mask];
        int col = size - 1;
        BinaryForm<K> acc(size);
        int pos = 0;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            const BinaryForm<K>& entry = l.at(i, col);
            if (!entry.is_zero_form()) {
                BinaryForm<K> sub;
                if (size == 1) {
                    sub = entry;
                } else {
                    sub = entry * self(self, mask & ~(1u << i));
                }
                if ((pos + col) % 2 == 0)
                    acc = acc + sub;
                else
                    acc = acc - sub;
            }
            ++pos;
        }
        seen[mask] = 1;
        memo[mask] = acc;
        return acc;
    };

    std::vector<BinaryForm<K>> out;
    // row subsets in lexicographic order, same as the bareiss path
    std::vector<int> rows(d);
    for (int i = 0; i < d; ++i) rows[i] = i;
    while (true) {
        unsigned mask = 0;
        for (int i : rows) mask |= (1u << i);
        out.push_back(rec(rec, mask));
        int j = d - 1;
        while (j >= 0 && rows[j] == n - d + j) --j;
        if (j < 0) break;
        ++rows[j];
        for (int k = j + 1; k < d; ++k) rows[k] = rows[k - 1] + 1;
    }
    return out;
}

/// One maximal minor by fraction-free Bareiss elimination over the
/// polynomial ring; exact divisions by previous pivots.
template <class K>
BinaryForm<K> minor_bareiss(const LinearMatrix<K>& l,
                            const std::vector<int>& rows) {
    int d = l.cols();
    std::vector<std::vector<BinaryForm<K>>> a(
        d, std::vector<BinaryForm<K>>(d, BinaryForm<K>(1)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = l.at(rows[i], j);

    BinaryForm<K> prev(0);
    bool have_prev = false;
    int sign = 1;
    for (int k = 0; k + 1 < d; ++k) {
        if (a[k][k].is_zero_form()) {
            int swap_i = -1;
            for (int i = k + 1; i < d; ++i)
                if (!a[i][k].is_zero_form()) {
                    swap_i = i;
                    break;
                }
            if (swap_i < 0) return BinaryForm<K>(d); // zero column: det 0
            std::swap(a[k], a[swap_i]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j) {
                BinaryForm<K> num =
                    a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = have_prev ? exact_div(num, prev) : num;
            }
        prev = a[k][k];
        have_prev = true;
    }
    BinaryForm<K> det = a[d - 1][d - 1];
    if (det.degree() != d) {
        // pad to the declared minor degree (zero dets lose their degree)
        BinaryForm<K> out(d);
        if (!det.is_zero_form())
            throw contract_error("bareiss degree bookkeeping failed");
        return out;
    }
    return sign > 0 ? det : -det;
}

} // namespace bundetail

/// All maximal minors of the presentation matrix; memoized Laplace for
/// d <= 8, fraction-free Bareiss per row subset beyond that.
template <class K>
std::vector<BinaryForm<K>> maximal_minors(const LinearMatrix<K>& l) {
    if (l.cols() <= 8 && l.rows() <= 20) return bundetail::minors_memo(l);
    std::vector<BinaryForm<K>> out;
    int n = l.rows(), d = l.cols();
    std::vector<int> rows(d);
    for (int i = 0; i < d; ++i) rows[i] = i;
    while (true) {
        out.push_back(bundetail::minor_bareiss(l, rows));
        int i = d - 1;
        while (i >= 0 && rows[i] == n - d + i) --i;
        if (i < 0) break;
        ++rows[i];
        for (int j = i + 1; j < d; ++j) rows[j] = rows[j - 1] + 1;
    }
    return out;
}

/// True iff the evaluated matrix has full column rank at every point of
/// A^2 minus the origin: not all minors vanish, and the minors have no
/// common projective zero (constant gcd).
template <class K>
bool degeneracy_check(const LinearMatrix<K>& l) {
    std::vector<BinaryForm<K>> ms = maximal_minors(l);
    std::vector<BinaryForm<K>> nonzero;
    for (auto& m : ms)
        if (!m.is_zero_form()) nonzero.push_back(std::move(m));
    if (nonzero.empty()) return false;
    // incremental gcd with early exit
    BinaryForm<K> g = nonzero.front();
    for (std::size_t i = 1; i < nonzero.size(); ++i) {
        if (g.degree() == 0) break;
        g = binary_gcd(g, nonzero[i]);
    }
    return g.degree() == 0;
}

/// Splitting type of the cokernel bundle: the multiset {m_1 <= ... <= m_r}
/// with sum d, read off the kernel dimensions k(t) of the transpose
/// multiplication maps H^0(O(t))^(r+d) -> H^0(O(t+1))^d; k(t) counts the
/// sections of E-dual(t), so k(t) = sum_i max(0, t - m_i + 1).
template <class K>
std::vector<int> splitting_type(const LinearMatrix<K>& l) {
    if (!degeneracy_check(l))
        throw contract_error("splitting type needs a nondegenerate matrix");
    int r = l.r(), d = l.d();

    auto kernel_dim = [&](int t) {
        // rows: d blocks of degree-(t+1) coefficients; cols: (r+d) blocks
        // of degree-t coefficients; block (i,j) is multiplication by
        // L[j][i] (the transpose entry)
        Mat<K> m(d * (t + 2), (l.rows()) * (t + 1));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < l.rows(); ++j) {
                const BinaryForm<K>& f = l.at(j, i);
                const K& a = f.coeff(0); // x1 coefficient
                const K& b = f.coeff(1); // x2 coefficient
                for (int k = 0; k <= t; ++k) {
                    // x1 * (x1^(t-k) x2^k) -> index k; x2 * ... -> k+1
                    m.at(i * (t + 2) + k, j * (t + 1) + k) += a;
                    m.at(i * (t + 2) + k + 1, j * (t + 1) + k) += b;
                }
            }
        return (l.rows()) * (t + 1) - rank(std::move(m));
    };

    std::vector<int> ks;
    std::vector<int> mult(d + 2, 0);
    int prev_c = 0;
    std::vector<int> out;
    for (int t = 0; t <= d + 1; ++t) {
        int k = kernel_dim(t);
        ks.push_back(k);
        int c = (t == 0) ? k : k - ks[t - 1];
        // c = #{i : m_i <= t}
        int here = c - prev_c;
        for (int cnt = 0; cnt < here; ++cnt) out.push_back(t);
        prev_c = c;
        if (c == r) break;
    }
    if (static_cast<int>(out.size()) != r)
        throw contract_error("splitting recovery failed");
    return out;
}

/// Uniform random matrix over F_p, deterministic in (seed); coefficients
/// drawn row-major, (x1 coeff, x2 coeff) per entry.
LinearMatrix<Fp> random_linear_matrix(int r, int d, std::uint64_t p,
                                      Rng& rng);

struct ProbeResult {
    long trials = 0;
    long degenerate = 0;
    std::map<std::vector<int>, long> histogram; // splitting type -> count
    bool exhaustive = false;
};

/// Monte Carlo (or exhaustive) sampling of M_{r,d}(F_p): fraction failing
/// the degeneracy check and the splitting-type histogram of the rest.
/// Each trial derives its generator from (seed, index), so results are
/// reproducible independent of evaluation order.
ProbeResult codim_probe(int r, int d, std::uint64_t p, long trials,
                        std::uint64_t seed, bool exhaustive = false);

} // namespace trig
