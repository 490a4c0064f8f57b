#include "donsum/qh2.hpp"

namespace donsum {

RatMatrix pairing_matrix() {
  RatMatrix m(4, 4);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) m(i, j) = qpair(RatClass::h_power(i), RatClass::h_power(j));
  }
  return m;
}

RatMatrix dual_pairing() { return mat_inv(pairing_matrix()); }

RatClass geometric_l() {
  return RatClass(basis_convert<GaussRat>({0, 0, 1, 0}, Basis::Geometric, Basis::Power));
}

RatClass geometric_p() {
  return RatClass(basis_convert<GaussRat>({0, 0, 0, 1}, Basis::Geometric, Basis::Power));
}

RatClass mu_sigma() { return RatClass::h().scaled(GaussRat::fraction(1, 2)); }

RatClass mu_x(MuXConvention conv) {
  switch (conv) {
    case MuXConvention::Corrected:
      return RatClass({GaussRat(-2), 0, GaussRat::fraction(1, 4), 0});
    case MuXConvention::Printed:
      return RatClass({GaussRat(2), 0, GaussRat(-4), 0});
    case MuXConvention::OppositeSign:
      return RatClass({GaussRat(2), 0, GaussRat::fraction(-1, 4), 0});
  }
  return RatClass();
}

RatClass mu_class(unsigned sigma_power, unsigned x_power, MuXConvention conv) {
  RatClass out = RatClass::unit();
  const RatClass ms = mu_sigma();
  const RatClass mx = mu_x(conv);
  for (unsigned k = 0; k < sigma_power; ++k) out = qmul(out, ms);
  for (unsigned k = 0; k < x_power; ++k) out = qmul(out, mx);
  return out;
}

ExpClass exp_h(const Polynomial& form, const GaussRat& scale) {
  if (form.degree() > 1 || !form.constant_term().is_zero()) {
    throw Error(Errc::InvalidArgument, "exp_h needs a linear form without constant term");
  }
  // p(h) = c0 + c1 h + c2 h^2 + c3 h^3 must agree with exp(x h), x = scale*form,
  // at h = 4, h = -4, and to first order at h = 0 (minimal polynomial h^2 (h^2 - 16)).
  const long root = 4;
  RatMatrix conditions(4, 4);
  for (unsigned k = 0; k < 4; ++k) {
    conditions(0, k) = GaussRat(root).pow(k);
    conditions(1, k) = GaussRat(-root).pow(k);
  }
  conditions(2, 0) = 1;  // p(0)
  conditions(3, 1) = 1;  // p'(0)
  const Polynomial x = form * Polynomial(scale);
  const std::array<ExpElement, 4> values{ExpElement::exp(x * Polynomial(root)),
                                         ExpElement::exp(x * Polynomial(-root)), ExpElement(1),
                                         ExpElement::from_polynomial(x)};
  const RatMatrix solve = mat_inv(conditions);
  std::array<ExpElement, 4> coeffs;
  for (unsigned k = 0; k < 4; ++k) {
    for (unsigned j = 0; j < 4; ++j) coeffs[k] += values[j].scaled(solve(k, j));
  }
  return ExpClass(coeffs);
}

ExpClass exp_mu_sigma(const Var& s) { return exp_h(Polynomial::variable(s), GaussRat::fraction(1, 2)); }

Rational sigma_scale_from_invariants(const GaussRat& d_sigma3, const GaussRat& d_sigma7) {
  // (a h)^6 = a^6 [h^6]_2 h^2 and pairing two of those h-factors back gives D(Sigma^{n+2}).
  const GaussRat six_fold = RatClass::h_power(6)[2];
  if (d_sigma3.is_zero() || !d_sigma3.is_real() || !d_sigma7.is_real()) {
    throw Error(Errc::OutOfDomain, "need real, nonzero D(Sigma^3)");
  }
  const GaussRat fourth = d_sigma7 / (six_fold * d_sigma3);
  auto root = rational_root(fourth.re(), 4);
  if (!root) throw Error(Errc::OutOfDomain, "a^4 = " + fourth.str() + " has no rational root");
  return *root;
}

namespace {

template <class R>
std::string render(const RingClass<R>& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0) s += ", ";
    s += z[i].str();
  }
  return s + ")";
}

}  // namespace

std::string to_string(const RatClass& z) { return render(z); }
std::string to_string(const ExpClass& z) { return render(z); }

}  // namespace donsum
