#pragma once

#include <vector>

#include "trig/matrix.hpp"
#include "trig/rational.hpp"

namespace trig {

using IntMat = Mat<Int>;

struct SmithResult {
    std::vector<Int> diag; // d_1 | d_2 | ..., all >= 0
    IntMat U;              // unimodular, rows x rows
    IntMat V;              // unimodular, cols x cols
};

/// Smith normal form U*M*V = diag(d_1, ..., d_k), d_i >= 0, d_i | d_{i+1},
/// U and V unimodular. Gcd-driven row/column elimination with pivoting on
/// the smallest nonzero entry.
SmithResult smith_normal_form(const IntMat& m);

/// Structure of Z^n / (lattice spanned by the columns of M):
/// free rank and the nontrivial torsion orders.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion; // each > 1, ordered by divisibility
};

AbelianGroup cokernel_structure(const IntMat& m);

} // namespace trig
