#include "trig/snf.hpp"

#include <algorithm>

namespace trig {

namespace {

IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void swap_rows(IntMat& m, int i, int j) {
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= q * row j
void row_sub(IntMat& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
}
void col_sub(IntMat& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
}
void negate_row(IntMat& m, int i) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

} // namespace

SmithResult smith_normal_form(const IntMat& m) {
    IntMat a = m;
    int rows = a.rows(), cols = a.cols();
    IntMat u = identity(rows), v = identity(cols);
    int k = std::min(rows, cols);

    for (int t = 0; t < k; ++t) {
        // pivot: smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                Int v2 = abs(a.at(i, j));
                if (v2 != 0 && (pi < 0 || v2 < best)) {
                    best = v2;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block is zero

        if (pi != t) {
            swap_rows(a, pi, t);
            swap_rows(u, pi, t);
        }
        if (pj != t) {
            swap_cols(a, pj, t);
            swap_cols(v, pj, t);
        }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = div_round(a.at(i, t), a.at(t, t));
                row_sub(a, i, t, q);
                row_sub(u, i, t, q);
                if (a.at(i, t) != 0) {
                    // remainder became the smaller pivot
                    swap_rows(a, i, t);
                    swap_rows(u, i, t);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = div_round(a.at(t, j), a.at(t, t));
                col_sub(a, j, t, q);
                col_sub(v, j, t, q);
                if (a.at(t, j) != 0) {
                    swap_cols(a, j, t);
                    swap_cols(v, j, t);
                    dirty = true;
                }
            }
        }

        if (a.at(t, t) < 0) {
            negate_row(a, t);
            negate_row(u, t);
        }

        // enforce divisibility d_t | (everything below-right): if some entry
        // is not divisible, fold its column in and redo this step
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols && !redo; ++j) {
                if (a.at(i, j) % a.at(t, t) != 0) {
                    col_sub(a, t, j, Int(-1)); // col t += col j
                    col_sub(v, t, j, Int(-1));
                    redo = true;
                }
            }
        if (redo) --t;
    }

    SmithResult res;
    res.U = u;
    res.V = v;
    for (int t = 0; t < k; ++t) {
        if (a.at(t, t) == 0) break;
        res.diag.push_back(a.at(t, t));
    }
    return res;
}

AbelianGroup cokernel_structure(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = m.rows() - static_cast<int>(s.diag.size());
    for (const Int& d : s.diag)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

} // namespace trig
