// Copyright 2026 The Taitfoam Authors.
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

#ifndef TAITFOAM_MATRIX_HPP_
#define TAITFOAM_MATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taitfoam/laurent.hpp"
#include "taitfoam/rational.hpp"

namespace taitfoam {

// Dense row-major matrix over a commutative ring of characteristic 2.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a += b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_entry(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero_entry(b(k, j))) out(i, j) += x * b(k, j);
      }
    return out;
  }

  Matrix scaled(const T& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = s * x;
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& x) { return is_zero_entry(x); });
  }

  // Rows of *this followed by rows of o.
  Matrix stacked(const Matrix& o) const {
    if (rows_ != 0 && o.rows_ != 0 && cols_ != o.cols_)
      throw std::invalid_argument("stacking matrices of different widths");
    Matrix out(rows_ + o.rows_, rows_ == 0 ? o.cols_ : cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  static bool is_zero_entry(const T& x) { return x.is_zero(); }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<RationalFunction>;

inline PolyMatrix poly_identity(std::size_t n) {
  return PolyMatrix::identity(n, LaurentPoly::one());
}

RationalMatrix to_rational(const PolyMatrix& m);

// Row-major text: one row per line, entries separated by " | ".
std::string format_matrix(const PolyMatrix& m);

}  // namespace taitfoam

#endif  // TAITFOAM_MATRIX_HPP_
