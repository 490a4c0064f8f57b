#include "donsum/matrix.hpp"

#include <utility>

namespace donsum {

ExpMatrix lift(const RatMatrix& m) {
  return m.map([](const GaussRat& v) { return ExpElement(v); });
}

RatMatrix constant_part(const ExpMatrix& m) {
  return m.map([](const ExpElement& v) { return v.constant_value(); });
}

RatMatrix mat_inv(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(Errc::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const GaussRat scale = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const GaussRat f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

GaussRat determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  GaussRat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return GaussRat(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const GaussRat inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const GaussRat f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

namespace {

template <class R>
std::string render(const Matrix<R>& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) s += ", ";
      s += m(r, c).str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

std::string to_string(const RatMatrix& m) { return render(m); }
std::string to_string(const ExpMatrix& m) { return render(m); }

}  // namespace donsum
