#pragma once

#include <array>
#include <cstddef>

#include "donsum/exppoly.hpp"
#include "donsum/gaussrat.hpp"
#include "donsum/matrix.hpp"

namespace donsum {

// Even quantum cohomology of the genus-2 moduli space, in the power basis
// e_i = h^i (0 <= i <= 3). The ring is Q[h]/(h^4 - 16 h^2); the pairing is
// <a, b> = 4 * (h^3-coordinate of a*b).

inline constexpr long kQuarticRelation = 16;  // h^4 = 16 h^2
inline constexpr long kTraceScale = 4;

template <class R>
class RingClass {
 public:
  RingClass() : c_{R(0), R(0), R(0), R(0)} {}
  explicit RingClass(std::array<R, 4> coords) : c_(std::move(coords)) {}

  static RingClass unit() { return RingClass({R(1), R(0), R(0), R(0)}); }
  static RingClass h() { return RingClass({R(0), R(1), R(0), R(0)}); }
  /// h^k reduced into the power basis.
  static RingClass h_power(unsigned k) {
    RingClass out = unit();
    for (unsigned i = 0; i < k; ++i) out = qmul(out, h());
    return out;
  }

  const R& operator[](std::size_t i) const { return c_[i]; }
  R& operator[](std::size_t i) { return c_[i]; }
  const std::array<R, 4>& coords() const noexcept { return c_; }

  RingClass& operator+=(const RingClass& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  RingClass& operator-=(const RingClass& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
  friend RingClass operator-(RingClass a, const RingClass& b) { return a -= b; }
  RingClass scaled(const R& s) const {
    RingClass out = *this;
    for (R& v : out.c_) v = v * s;
    return out;
  }

  friend bool operator==(const RingClass&, const RingClass&) = default;

  /// Quantum product; powers h^4..h^6 are folded back with h^4 = 16 h^2.
  friend RingClass qmul(const RingClass& a, const RingClass& b) {
    std::array<R, 7> wide{R(0), R(0), R(0), R(0), R(0), R(0), R(0)};
    for (std::size_t i = 0; i < 4; ++i) {
      if (a.c_[i] == R(0)) continue;
      for (std::size_t j = 0; j < 4; ++j) wide[i + j] += a.c_[i] * b.c_[j];
    }
    for (std::size_t k = 6; k >= 4; --k) wide[k - 2] += wide[k] * R(kQuarticRelation);
    return RingClass({wide[0], wide[1], wide[2], wide[3]});
  }

  friend R qpair(const RingClass& a, const RingClass& b) { return qmul(a, b)[3] * R(kTraceScale); }

  template <class S>
  RingClass<S> cast() const {
    return RingClass<S>({S(c_[0]), S(c_[1]), S(c_[2]), S(c_[3])});
  }

 private:
  std::array<R, 4> c_;
};

using RatClass = RingClass<GaussRat>;
using ExpClass = RingClass<ExpElement>;

/// Gram matrix <e_i, e_j> of the power basis.
RatMatrix pairing_matrix();
/// <e_i^*, e_j^*>: the inverse of pairing_matrix().
RatMatrix dual_pairing();

// Geometric generators 1, h, l, p with h*h = 4l + 4 and h*h*h = 4p + 12h.
enum class Basis { Power, Geometric };

template <class R>
std::array<R, 4> basis_convert(const std::array<R, 4>& coords, Basis from, Basis to) {
  if (from == to) return coords;
  const auto& c = coords;
  if (from == Basis::Power) {
    // c0 + c1 h + c2 (4l + 4) + c3 (4p + 12h)
    return {c[0] + c[2] * R(4), c[1] + c[3] * R(12), c[2] * R(4), c[3] * R(4)};
  }
  // g0 + g1 h + g2 (h^2 - 4)/4 + g3 (h^3 - 12h)/4
  const R quarter(GaussRat::fraction(1, 4));
  return {c[0] - c[2], c[1] - c[3] * R(3), c[2] * quarter, c[3] * quarter};
}

RatClass geometric_l();
RatClass geometric_p();

/// Which image of the point class to use. Corrected is h^2/4 - 2; the other
/// two exist so the verification suite can show they are rejected.
enum class MuXConvention { Corrected, Printed, OppositeSign };

RatClass mu_sigma();
RatClass mu_x(MuXConvention conv = MuXConvention::Corrected);
/// mu(Sigma)^a * mu(x)^b.
RatClass mu_class(unsigned sigma_power, unsigned x_power, MuXConvention conv = MuXConvention::Corrected);

/// exp(scale * form * h) for a linear form, by Hermite interpolation on the
/// spectrum {4, -4, 0 (double)} of multiplication by h.
ExpClass exp_h(const Polynomial& form, const GaussRat& scale);
/// exp(s * mu(Sigma)).
ExpClass exp_mu_sigma(const Var& s);

/// Entry (i, j) is the h^j-coordinate of z * h^i.
template <class R>
Matrix<R> mult_matrix(const RingClass<R>& z) {
  Matrix<R> m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const RingClass<R> row = qmul(z, RingClass<R>::h_power(static_cast<unsigned>(i)));
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = row[j];
  }
  return m;
}

/// Dual-basis coordinates (<z, h^0>, ..., <z, h^3>).
template <class R>
std::array<R, 4> dual_coords(const RingClass<R>& z) {
  std::array<R, 4> out{R(0), R(0), R(0), R(0)};
  for (std::size_t l = 0; l < 4; ++l) out[l] = qpair(z, RingClass<R>::h_power(static_cast<unsigned>(l)));
  return out;
}

/// Solves for the scale a in mu(Sigma) = a*h from D(Sigma^3) and D(Sigma^7)
/// on a manifold with D(Sigma^{n+6}) = a^4 * [h^6]_2 * D(Sigma^{n+2}); returns
/// the positive rational root, or throws OutOfDomain if there is none.
Rational sigma_scale_from_invariants(const GaussRat& d_sigma3, const GaussRat& d_sigma7);

std::string to_string(const RatClass& z);
std::string to_string(const ExpClass& z);

}  // namespace donsum
