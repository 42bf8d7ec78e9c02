#pragma once

#include <vector>

#include "trig/error.hpp"
#include "trig/rational.hpp"

namespace trig {

/// Dense rectangular matrix over an exact scalar K.
template <class K>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, K{}) {
        if (rows < 0 || cols < 0) throw contract_error("negative matrix size");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw contract_error("matrix size mismatch");
        Mat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (is_zero(x.at(i, k))) continue;
                for (int j = 0; j < y.cols_; ++j)
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    int rows_, cols_;
    std::vector<K> a_;
};

/// Row-reduce in place (field K); returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        K inv = field_inv(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

/// Basis of the right null space {v : Mv = 0}; dimension = cols - rank.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m, const K& one_exemplar) {
    K one = ring_one(one_exemplar);
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<K>> basis;
    for (int freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<K> v(m.cols(), K{});
        v[freec] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            // pivot row r has leading 1 at column pivots[r]
            v[pivots[r]] = -m.at(static_cast<int>(r), freec);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace trig
