// Small dense matrices over the rationals: elimination, inverses and the
// Moore-Penrose pseudo-inverse through a full-rank factorisation.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heatwg/rational.hpp"

namespace heatwg {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> row_reduce(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (sgn(m(i, col)) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (sgn(m(row, j)) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(RationalMatrix m) { return static_cast<int>(row_reduce(m).size()); }

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Solves a x = b for square invertible a; nullopt when a is singular.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

// A = F H with F the pivot columns of A and H the nonzero rows of rref(A);
// then A^+ = H^T (H H^T)^{-1} (F^T F)^{-1} F^T.
inline RationalMatrix moore_penrose(const RationalMatrix& a) {
  RationalMatrix reduced = a;
  const auto pivots = row_reduce(reduced);
  const int r = static_cast<int>(pivots.size());
  if (r == 0) return RationalMatrix(a.cols(), a.rows());
  RationalMatrix f(a.rows(), r), h(r, a.cols());
  for (int k = 0; k < r; ++k) {
    for (int i = 0; i < a.rows(); ++i) f(i, k) = a(i, pivots[k]);
    for (int j = 0; j < a.cols(); ++j) h(k, j) = reduced(k, j);
  }
  const RationalMatrix ft = f.transpose(), ht = h.transpose();
  const auto ftf_inv = inverse(ft * f);
  const auto hht_inv = inverse(h * ht);
  if (!ftf_inv || !hht_inv) throw std::logic_error("full-rank factorisation lost rank");
  return ht * (*hht_inv) * (*ftf_inv) * ft;
}

}  // namespace heatwg
