#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "hodgeloci/cyclotomic.hpp"
#include "hodgeloci/errors.hpp"
#include "hodgeloci/rational.hpp"

namespace hodgeloci {

/// Dense row-major matrix over an exact field T (Rational or CyclotomicNumber).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw PreconditionError("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] + b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix difference dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] - b.data_[i];
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Copy of the submatrix with the given row range [r0, r1) and all columns.
  Matrix row_block(std::size_t r0, std::size_t r1) const {
    Matrix m(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - r0, j) = (*this)(i, j);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

// Fraction-free (Bareiss) forward elimination in place. Returns the rank and,
// through `sign`, the parity of the row swaps performed.
template <class T>
std::size_t bareiss_eliminate(Matrix<T>& a, int& sign) {
  sign = 1;
  std::size_t rank = 0;
  T previous(1);
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / previous;
      }
      a(i, col) = T(0);
    }
    previous = a(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank.
template <class T>
std::size_t rank(Matrix<T> a) {
  int sign = 1;
  return detail::bareiss_eliminate(a, sign);
}

template <class T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of non-square matrix");
  if (a.rows() == 0) return T(1);
  int sign = 1;
  const std::size_t r = detail::bareiss_eliminate(a, sign);
  if (r < a.rows()) return T(0);
  const T& d = a(a.rows() - 1, a.cols() - 1);
  return sign > 0 ? d : T(0) - d;
}

/// Reduced row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const T inv = T(1) / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const T f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right kernel {x : a x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> a) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = T(0) - a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

using RationalMatrix = Matrix<Rational>;
using CyclotomicMatrix = Matrix<CyclotomicNumber>;

}  // namespace hodgeloci
