// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rtrop/error.hpp"
#include "rtrop/puiseux.hpp"
#include "rtrop/rational.hpp"

namespace rtrop {

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  /// Rows of equal length; throws dimension_mismatch otherwise.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorKind::dimension_mismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    return from_rows(cols).transpose();
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

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void set_column(std::size_t j, std::span<const T> v) {
    if (v.size() != rows_) throw Error(ErrorKind::dimension_mismatch, "column length");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    }
    return m;
  }
  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    }
    return m;
  }
  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<PuiseuxPoly>;
using QVector = std::vector<Rational>;
using PVector = std::vector<PuiseuxPoly>;

inline constexpr std::size_t kMaxDeterminantSize = 16;

/// Division-free determinant by Laplace expansion memoized over column
/// subsets: O(n 2^n) ring operations.
template <class T>
T det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
  if (n > kMaxDeterminantSize) throw Error(ErrorKind::cap_exceeded, "matrix too large for determinant");
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  // d[S] = determinant of the first |S| rows restricted to the columns in S.
  std::vector<T> d(std::size_t(1) << n, T(0));
  d[0] = T(1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    const std::size_t row = k - 1;
    T acc(0);
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      const T& a = m(row, j);
      if (!a.is_zero()) {
        const T& sub = d[mask & ~(1u << j)];
        if (!sub.is_zero()) {
          if ((static_cast<int>(row) + pos) % 2 == 0) {
            acc += a * sub;
          } else {
            acc -= a * sub;
          }
        }
      }
      ++pos;
    }
    d[mask] = std::move(acc);
  }
  return d.back();
}

/// Rank by division-free Gaussian elimination (valid over integral domains).
template <class T>
std::size_t rank(Matrix<T> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(r, c) * m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Exact linear algebra over Q.
std::size_t rank_q(QMatrix m);
/// Solution x of m x = b, or nullopt when inconsistent; m need not be square.
std::optional<QVector> solve_q(const QMatrix& m, const QVector& b);
/// Throws singular_basis when m is not invertible.
QMatrix inverse_q(const QMatrix& m);
/// Basis of the right kernel.
std::vector<QVector> kernel_q(const QMatrix& m);

/// Entrywise conversions; the second requires constant entries.
PMatrix to_puiseux(const QMatrix& m);
QMatrix to_rational(const PMatrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
PuiseuxPoly dot(std::span<const PuiseuxPoly> a, std::span<const PuiseuxPoly> b);

}  // namespace rtrop
