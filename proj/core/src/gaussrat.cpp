#include "donsum/gaussrat.hpp"

#include "donsum/errors.hpp"

namespace donsum {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "Parse";
    case Errc::Validation: return "Validation";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::QuadraticInVar: return "QuadraticInVar";
    case Errc::Singular: return "Singular";
    case Errc::NonIntegralSign: return "NonIntegralSign";
    case Errc::BadTopology: return "BadTopology";
    case Errc::GenusMismatch: return "GenusMismatch";
    case Errc::GenusUnsupported: return "GenusUnsupported";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotSimpleType: return "NotSimpleType";
    case Errc::SingularCap: return "SingularCap";
    case Errc::SectorMismatch: return "SectorMismatch";
    case Errc::OutOfDomain: return "OutOfDomain";
  }
  return "Unknown";
}

GaussRat GaussRat::fraction(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const Rational n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat GaussRat::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  GaussRat result(1);
  GaussRat base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

GaussRat GaussRat::i_pow(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return i();
    case 2: return GaussRat(-1);
    default: return -i();
  }
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
  const int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int d = cmp(a.im_, b.im_);
  if (d != 0) return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string GaussRat::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

std::optional<Rational> rational_root(const Rational& q, unsigned n) {
  if (n == 0 || sgn(q) < 0) return std::nullopt;
  Integer num, den;
  mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), n);
  mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), n);
  Rational r(num, den);
  r.canonicalize();
  Rational check = 1;
  for (unsigned k = 0; k < n; ++k) check *= r;
  if (check != q) return std::nullopt;
  return r;
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace donsum
