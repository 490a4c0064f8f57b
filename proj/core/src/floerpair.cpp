#include "donsum/floerpair.hpp"

#include <map>

#include "donsum/errors.hpp"

namespace donsum {

namespace {

RatMatrix quarter_mprime() {
  const GaussRat q = GaussRat::fraction(1, 4);
  return RatMatrix{{0, -16, 0, 1}, {-16, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}.scaled(q);
}

long mod(long x, long m) { return ((x % m) + m) % m; }

}  // namespace

IntVec normalize_dbar(const ManifoldDescriptor& m, const IntVec& dbar) {
  const Lattice& lat = m.lattice;
  if (lat.pair(dbar, m.sigma) != 1) throw Error(Errc::InvalidArgument, "dbar.Sigma must be 1");
  const long sq = lat.square(dbar);
  if (mod(sq, 2) != 0) throw Error(Errc::NotNormalized, "dbar^2 = " + std::to_string(sq) + " is odd");
  // (dbar + k Sigma)^2 = dbar^2 + 2k
  const long k = -sq / 2;
  IntVec out = dbar;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += k * m.sigma[i];
  return out;
}

CoefVector v_vector(const StructureSeries& s, const IntVec& dbar, const Var& t) {
  const ManifoldDescriptor& m = s.owner;
  if (!m.simple_type) throw Error(Errc::NotSimpleType, m.name + " is not of simple type");
  if (m.lattice.square(dbar) != 0) throw Error(Errc::NotNormalized, "dbar^2 must be 0");
  CoefVector v;
  for (const BasicClass& b : s.classes) {
    const long ks = m.lattice.pair(b.k, m.sigma);
    const std::size_t slot = ks == 2 ? 0 : ks == -2 ? 1 : ks == 0 ? 2 : 3;
    if (slot == 3) throw Error(Errc::Validation, "K.Sigma outside {-2, 0, 2}");
    const Polynomial freq = Polynomial::monomial(GaussRat(m.lattice.pair(b.k, dbar)), Monomial::of(t));
    v[slot] += ExpElement::exp(freq).scaled(b.coeff);
  }
  return v;
}

ExpMatrix b_matrix(const Var& s) { return lift(quarter_mprime()) * mult_matrix(exp_mu_sigma(s)); }

ExpMatrix a_matrix_by_extraction(const RelVector& psi, const Var& s) {
  const ExpMatrix b = b_matrix(s);
  const Polynomial two = Polynomial::monomial(GaussRat(2), Monomial{});
  ExpMatrix a(4, 4);
  for (std::size_t col = 0; col < 4; ++col) {
    ExpElement value;
    for (std::size_t i = 0; i < 4; ++i) value += psi[i] * b(i, col);
    a(0, col) = value.extract(s, 0, two);
    a(1, col) = value.extract(s, 0, -two);
    a(2, col) = value.extract(s, 0, Polynomial());
    a(3, col) = value.extract(s, 1, Polynomial());
  }
  return a;
}

RatMatrix u_matrix(const std::array<GaussRat, 4>& a) {
  const GaussRat plus = a[3] + GaussRat(4) * a[2];
  const GaussRat minus = a[3] - GaussRat(4) * a[2];
  const GaussRat odd = a[3] - GaussRat(16) * a[1];
  if (plus.is_zero() || minus.is_zero() || odd.is_zero()) {
    throw Error(Errc::SingularCap, "cap parameters on (a3 + 4a2)(a3 - 4a2)(a3 - 16a1) = 0");
  }
  RatMatrix u(4, 4);
  u(0, 0) = GaussRat(512) / (plus * plus);
  u(1, 1) = GaussRat(-512) / (minus * minus);
  u(2, 3) = GaussRat(-128) / (odd * odd);
  u(3, 2) = u(2, 3);
  u(3, 3) = GaussRat(512) * (a[2] - GaussRat(16) * a[0]) / (odd * odd * odd);
  return u;
}

RatMatrix u_matrix_printed(const std::array<GaussRat, 4>& a) {
  const RatMatrix u = u_matrix(a);
  RatMatrix p(4, 4);
  p(0, 0) = u(0, 0) * GaussRat::fraction(1, 16);
  p(1, 1) = u(1, 1) * GaussRat::fraction(1, 16);
  p(2, 3) = u(2, 3) * GaussRat::fraction(1, 32);
  p(3, 2) = p(2, 3);
  p(3, 3) = u(3, 3) * GaussRat::fraction(1, 64);
  return p;
}

ExpElement pair_relative(const RelVector& phi, const RelVector& psi, const Var& s, const std::optional<Var>& t,
                         long d_sigma) {
  const ExpMatrix b = b_matrix(s);
  ExpElement total;
  for (std::size_t i = 0; i < 4; ++i) {
    if (phi[i].is_zero()) continue;
    ExpElement row;
    for (std::size_t j = 0; j < 4; ++j) row += b(i, j) * psi[j];
    total += phi[i] * row;
  }
  if (!t) return total;
  const Polynomial ts = Polynomial::monomial(GaussRat(d_sigma), Monomial::of(*t) * Monomial::of(s));
  return ExpElement::exp(ts) * total;
}

RelVector relative_from_closed(const StructureSeries& s, const Probe& alpha, CycleMonomial extra) {
  const ManifoldDescriptor& m = s.owner;
  std::map<Var, GaussRat> against_sigma;
  for (const ProbeTerm& term : alpha) {
    against_sigma[term.var] += term.coeff * GaussRat(m.lattice.pair(term.cls, m.sigma));
  }
  for (const auto& entry : against_sigma) {
    if (!entry.second.is_zero()) throw Error(Errc::InvalidArgument, "probe classes must be orthogonal to Sigma");
  }
  // A variable name that cannot collide with probe identifiers.
  const Var u = "#sigma";
  const ExpElement gen = dx_eval(s, alpha + probe(u, m.sigma), extra.x_power);
  RelVector phi;
  for (unsigned l = 0; l < 4; ++l) {
    const unsigned n = l + extra.sigma_power;
    const Rational scale = factorial(n) * Rational(Integer(1) << l);
    phi[l] = gen.taylor_coefficient(u, n).scaled(GaussRat(scale));
  }
  return phi;
}

std::array<GaussRat, 4> cap_parameters(CycleMonomial extra, MuXConvention conv) {
  return dual_coords(mu_class(extra.sigma_power, extra.x_power, conv));
}

RelVector cap_vector(CycleMonomial extra, MuXConvention conv) {
  const auto a = cap_parameters(extra, conv);
  return {ExpElement(a[0]), ExpElement(a[1]), ExpElement(a[2]), ExpElement(a[3])};
}

}  // namespace donsum
