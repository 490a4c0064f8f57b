#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace donsum {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact Gaussian rational re + im*i. Both parts are kept canonical by GMP
/// (coprime, positive denominator).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }
  static GaussRat fraction(long num, long den);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;
  /// Integer power; negative exponents invert.
  GaussRat pow(long n) const;
  /// i^n for any integer n.
  static GaussRat i_pow(long n);

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); only used to give containers a total order.
  friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);

  /// Canonical text: "3", "-1/4", "1/2+3/4*i", "-i".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

 private:
  Rational re_;
  Rational im_;
};

/// Exact n-th root of a non-negative rational when it exists.
std::optional<Rational> rational_root(const Rational& q, unsigned n);

Rational factorial(unsigned n);

}  // namespace donsum
