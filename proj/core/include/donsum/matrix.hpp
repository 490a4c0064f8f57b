#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "donsum/errors.hpp"
#include "donsum/exppoly.hpp"
#include "donsum/gaussrat.hpp"

namespace donsum {

/// Dense row-major matrix over an exact coefficient ring (GaussRat or
/// ExpElement).
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(Errc::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::InvalidArgument, "matrix shapes do not chain");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& lhs = a(r, k);
        if (lhs == R(0)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
      }
    }
    return out;
  }

  Matrix scaled(const R& s) const {
    Matrix out = *this;
    for (R& v : out.data_) v = v * s;
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const R&>()))> {
    Matrix<decltype(fn(std::declval<const R&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = fn((*this)(r, c));
    }
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::InvalidArgument, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using RatMatrix = Matrix<GaussRat>;
using ExpMatrix = Matrix<ExpElement>;

/// Embeds a constant matrix into ExpElement entries.
ExpMatrix lift(const RatMatrix& m);

/// Exact inverse by Gauss-Jordan elimination. Throws Singular.
RatMatrix mat_inv(const RatMatrix& m);

GaussRat determinant(const RatMatrix& m);

/// Matrix with every entry a constant; throws InvalidArgument otherwise.
RatMatrix constant_part(const ExpMatrix& m);

std::string to_string(const RatMatrix& m);
std::string to_string(const ExpMatrix& m);

}  // namespace donsum
