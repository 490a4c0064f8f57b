#include "donsum/conformance.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "donsum/errors.hpp"
#include "donsum/exppoly.hpp"
#include "donsum/fibersum.hpp"
#include "donsum/floerpair.hpp"

namespace donsum {

namespace {

// ------------------------------------------------------------ randomness

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  GaussRat rational(long span = 9, long max_den = 6) {
    return GaussRat::fraction(integer(-span, span), integer(1, max_den));
  }

  GaussRat nonzero_rational() {
    GaussRat r;
    do r = rational();
    while (r.is_zero());
    return r;
  }

  GaussRat gaussian() { return GaussRat(rational().re(), rational().re()); }

  RatClass ring_class() { return RatClass({gaussian(), gaussian(), gaussian(), gaussian()}); }

  std::array<GaussRat, 4> quad() { return {rational(), rational(), rational(), rational()}; }

 private:
  std::mt19937_64 rng_;
};

// ----------------------------------------------------------- check plumbing

struct Suite {
  const VerifyOptions& opts;
  std::vector<CheckResult>& out;
  std::string section;

  unsigned count() const { return std::max(20u, opts.instances); }

  /// Runs `body`, which returns an empty string on success or a failure
  /// detail. Exceptions count as failures.
  void check(const std::string& id, int criterion, const std::string& description,
             const std::function<std::string()>& body) {
    CheckResult r{id, section, criterion, description, false, ""};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

RatMatrix four_m() { return RatMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 16}, {1, 0, 16, 0}}.scaled(GaussRat(4)); }

RatMatrix quarter_mprime() {
  return RatMatrix{{0, -16, 0, 1}, {-16, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}.scaled(GaussRat::fraction(1, 4));
}

ExpMatrix parse_matrix(const std::vector<std::vector<const char*>>& rows) {
  ExpMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = parse_exp(rows[r][c]);
  }
  return m;
}

std::string compare_matrices(const ExpMatrix& got, const ExpMatrix& want) {
  for (std::size_t r = 0; r < want.rows(); ++r) {
    for (std::size_t c = 0; c < want.cols(); ++c) {
      if (!(got(r, c) == want(r, c))) {
        return mismatch("entry (" + std::to_string(r) + "," + std::to_string(c) + ")", got(r, c).str(),
                        want(r, c).str());
      }
    }
  }
  return "";
}

RatClass basis(unsigned i) { return RatClass::h_power(i); }

/// Integral K with K.v = v.v (mod 2) on the reference lattice and |K.Sigma| <= 2.
IntVec random_characteristic(Sampler& rng, const ManifoldDescriptor& m) {
  for (;;) {
    IntVec k{2 * rng.integer(-2, 2), 2 * rng.integer(-2, 2) + 1, 2 * rng.integer(-2, 2) + 1, 2 * rng.integer(-2, 2)};
    if (std::labs(m.lattice.pair(k, m.sigma)) <= 2 * m.genus - 2) return k;
  }
}

StructureSeries random_series(Sampler& rng, const ManifoldDescriptor& m) {
  StructureSeries s{m, {}};
  std::set<IntVec> seen;
  const long n = rng.integer(1, 5);
  while (static_cast<long>(s.classes.size()) < n) {
    IntVec k = random_characteristic(rng, m);
    if (!seen.insert(k).second) continue;
    s.classes.push_back({k, GaussRat(rng.nonzero_rational().re(), rng.rational().re()), std::nullopt});
  }
  return s;
}

std::vector<BasicClass> sorted_classes(std::vector<BasicClass> v) {
  std::sort(v.begin(), v.end(), [](const BasicClass& a, const BasicClass& b) { return a.k < b.k; });
  return v;
}

bool same_series(const StructureSeries& a, const StructureSeries& b) {
  const auto x = sorted_classes(a.classes);
  const auto y = sorted_classes(b.classes);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].k != y[i].k || !(x[i].coeff == y[i].coeff)) return false;
  }
  return true;
}

// --------------------------------------------------------------- sections

void ring_checks(Suite& s, Sampler& rng) {
  s.check("pairing-matrix", 1, "qpair on the power basis is 4M", [] {
    const RatMatrix got = pairing_matrix();
    return got == four_m() ? "" : mismatch("pairing", to_string(got), to_string(four_m()));
  });
  s.check("dual-pairing", 1, "inverse of 4M is (1/4)M'", [] {
    const RatMatrix got = mat_inv(four_m());
    if (!(got == quarter_mprime())) return mismatch("inverse", to_string(got), to_string(quarter_mprime()));
    return dual_pairing() == quarter_mprime() ? std::string() : std::string("dual_pairing differs");
  });
  s.check("geometric-relations", 1, "h*h = 4l + 4 and h*h*h = 4p + 12h", [] {
    const RatClass h = RatClass::h();
    const RatClass hh = qmul(h, h);
    const RatClass want2 = geometric_l().scaled(GaussRat(4)) + RatClass::unit().scaled(GaussRat(4));
    const RatClass want3 = geometric_p().scaled(GaussRat(4)) + h.scaled(GaussRat(12));
    if (!(hh == want2)) return mismatch("h*h", to_string(hh), to_string(want2));
    if (!(qmul(hh, h) == want3)) return mismatch("h*h*h", to_string(qmul(hh, h)), to_string(want3));
    if (!(qpair(geometric_p(), RatClass::unit()) == GaussRat(1))) return std::string("<p, 1> != 1");
    return std::string();
  });
  s.check("expsigma-closed-form", 2, "exp(s mu(Sigma)) has the closed coordinates", [] {
    const ExpClass e = exp_mu_sigma("s");
    const char* printed[4] = {"1", "s/2", "(cosh(2*s) - 1)/16", "(sinh(2*s) - 2*s)/64"};
    for (std::size_t i = 0; i < 4; ++i) {
      const ExpElement want = parse_exp(printed[i]);
      if (!(e[i] == want)) return mismatch("coordinate " + std::to_string(i), e[i].str(), want.str());
    }
    return std::string();
  });
  s.check("expsigma-derivative", 2, "d/ds E = mu(Sigma) * E", [] {
    const ExpClass e = exp_mu_sigma("s");
    const ExpClass rhs = qmul(mu_sigma().cast<ExpElement>(), e);
    for (std::size_t i = 0; i < 4; ++i) {
      if (!(e[i].derive("s") == rhs[i])) return mismatch("coordinate " + std::to_string(i), e[i].derive("s").str(), rhs[i].str());
    }
    return std::string();
  });
  s.check("expsigma-series", 2, "E matches sum (s mu(Sigma))^n / n! through order 12", [] {
    const ExpClass e = exp_mu_sigma("s");
    RatClass power = RatClass::unit();
    for (unsigned n = 0; n <= 12; ++n) {
      const RatClass term = power.scaled(GaussRat(Rational(1) / factorial(n)));
      for (std::size_t i = 0; i < 4; ++i) {
        const ExpElement got = e[i].taylor_coefficient("s", n);
        if (!(got == ExpElement(term[i]))) {
          return mismatch("order " + std::to_string(n) + " coordinate " + std::to_string(i), got.str(), term[i].str());
        }
      }
      power = qmul(power, mu_sigma());
    }
    return std::string();
  });
  s.check("mult-matrix-printed", 2, "multiplication matrix of E is the printed one", [] {
    const ExpMatrix want = parse_matrix({{"1", "s/2", "(cosh(2*s) - 1)/16", "(sinh(2*s) - 2*s)/64"},
                                         {"0", "1", "sinh(2*s)/4", "(cosh(2*s) - 1)/16"},
                                         {"0", "0", "cosh(2*s)", "sinh(2*s)/4"},
                                         {"0", "0", "4*sinh(2*s)", "cosh(2*s)"}});
    return compare_matrices(mult_matrix(exp_mu_sigma("s")), want);
  });
  s.check("ring-laws", 10, "qmul is commutative, associative, unital and distributive", [&] {
    for (unsigned n = 0; n < s.count(); ++n) {
      const RatClass a = rng.ring_class();
      const RatClass b = rng.ring_class();
      const RatClass c = rng.ring_class();
      if (!(qmul(a, b) == qmul(b, a))) return "commutativity fails at " + to_string(a) + ", " + to_string(b);
      if (!(qmul(qmul(a, b), c) == qmul(a, qmul(b, c)))) return "associativity fails at " + to_string(a);
      if (!(qmul(RatClass::unit(), a) == a)) return "unit fails at " + to_string(a);
      if (!(qmul(a, b + c) == qmul(a, b) + qmul(a, c))) return "distributivity fails at " + to_string(a);
    }
    return std::string();
  });
  s.check("frobenius", 10, "<a*b, c> = <a, b*c> on all 64 basis triples", [] {
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = 0; j < 4; ++j) {
        for (unsigned k = 0; k < 4; ++k) {
          if (!(qpair(qmul(basis(i), basis(j)), basis(k)) == qpair(basis(i), qmul(basis(j), basis(k))))) {
            return "fails at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
          }
        }
      }
    }
    return std::string();
  });
  s.check("mu-x-square", 10, "mu(x)^2 = 4", [] {
    const RatClass sq = qmul(mu_x(), mu_x());
    return sq == RatClass::unit().scaled(GaussRat(4)) ? "" : mismatch("mu(x)^2", to_string(sq), "4");
  });
  s.check("exp-homomorphism", 10, "E(s) E(u) = E(s + u), symbolically and at random scalings", [&] {
    const GaussRat half = GaussRat::fraction(1, 2);
    const Polynomial s_var = Polynomial::variable("s");
    const Polynomial u_var = Polynomial::variable("u");
    if (!(qmul(exp_h(s_var, half), exp_h(u_var, half)) == exp_h(s_var + u_var, half))) {
      return std::string("symbolic identity fails");
    }
    for (unsigned n = 0; n < s.count(); ++n) {
      const GaussRat a = rng.rational();
      const GaussRat b = rng.rational();
      const ExpClass lhs = qmul(exp_h(s_var, a * half), exp_h(s_var, b * half));
      if (!(lhs == exp_h(s_var, (a + b) * half))) return "fails at a = " + a.str() + ", b = " + b.str();
    }
    return std::string();
  });
}

void matrix_checks(Suite& s, Sampler& rng) {
  s.check("b-matrix-printed", 3, "B equals the printed matrix entrywise", [] {
    const ExpMatrix want = parse_matrix({{"0", "-4", "0", "1/4"},
                                         {"-4", "-2*s", "1/4", "s/8"},
                                         {"0", "1/4", "sinh(2*s)/16", "(cosh(2*s) - 1)/64"},
                                         {"1/4", "s/8", "(cosh(2*s) - 1)/64", "(sinh(2*s) - 2*s)/256"}});
    const ExpMatrix b = b_matrix("s");
    if (!(b.transpose() == b)) return std::string("B is not symmetric");
    return compare_matrices(b, want);
  });
  s.check("a-matrix-identity", 3, "(e^{2s}, e^{-2s}, 1, s) A_psi phi = psi^T B phi at random psi", [&] {
    for (unsigned n = 0; n < s.count(); ++n) {
      const auto psi = rng.quad();
      const RelVector lifted{ExpElement(psi[0]), ExpElement(psi[1]), ExpElement(psi[2]), ExpElement(psi[3])};
      const std::string err = compare_matrices(lift(a_matrix(psi)), a_matrix_by_extraction(lifted, "s"));
      if (!err.empty()) return err;
    }
    // Once more with psi depending on t, as relative vectors do.
    RelVector psi_t{parse_exp("exp(2*t)"), parse_exp("t"), parse_exp("3 - exp(-2*t)"), parse_exp("1/5")};
    return compare_matrices(a_matrix(psi_t), a_matrix_by_extraction(psi_t, "s"));
  });
  s.check("u-matrix-conjugation", 3, "A_a^T U(a) A_a = (1/4)M' at random admissible a", [&] {
    unsigned done = 0;
    while (done < s.count()) {
      const auto a = rng.quad();
      RatMatrix u;
      try {
        u = u_matrix(a);
      } catch (const Error& e) {
        if (e.code() == Errc::SingularCap) continue;
        throw;
      }
      const RatMatrix am = a_matrix(a);
      const RatMatrix got = am.transpose() * u * am;
      if (!(got == quarter_mprime())) return mismatch("A^T U A", to_string(got), to_string(quarter_mprime()));
      ++done;
    }
    return std::string();
  });
  s.check("u-matrix-printed-rejected", 3, "the uncorrected U misses (1/4)M' by a scale", [] {
    const std::array<GaussRat, 4> a{1, 2, 3, 5};
    const RatMatrix am = a_matrix(a);
    const RatMatrix got = am.transpose() * u_matrix_printed(a) * am;
    return got == quarter_mprime() ? std::string("printed U unexpectedly satisfies the identity") : std::string();
  });
  s.check("singular-locus", 3, "det A_a = 0 and SingularCap exactly on (a3 +- 4a2)(a3 - 16a1) = 0", [&] {
    for (unsigned n = 0; n < s.count(); ++n) {
      auto a = rng.quad();
      const int factor = static_cast<int>(n % 3);
      if (factor == 0) a[3] = GaussRat(4) * a[2];
      if (factor == 1) a[3] = GaussRat(-4) * a[2];
      if (factor == 2) a[3] = GaussRat(16) * a[1];
      if (!determinant(a_matrix(a)).is_zero()) return "det nonzero on factor " + std::to_string(factor);
      try {
        u_matrix(a);
        return "no SingularCap on factor " + std::to_string(factor);
      } catch (const Error& e) {
        if (e.code() != Errc::SingularCap) throw;
      }
      // Straddle the factor: moving a3 off it by +-1/7 gives an admissible point
      // unless another factor vanishes there.
      for (const GaussRat& step : {GaussRat::fraction(1, 7), GaussRat::fraction(-1, 7)}) {
        auto b = a;
        b[3] += step;
        const GaussRat prod = (b[3] - GaussRat(4) * b[2]) * (b[3] + GaussRat(4) * b[2]) * (b[3] - GaussRat(16) * b[1]);
        if (prod.is_zero()) continue;
        if (determinant(a_matrix(b)).is_zero()) return std::string("det vanishes off the locus");
      }
    }
    return std::string();
  });
}

void cap_checks(Suite& s) {
  const StructureSeries k3 = reference_k3_blowup();
  s.check("cap-cap", 4, "pairing the cap with itself gives (1/16)(sinh 2s - 2s)", [] {
    const ExpElement got = pair_relative(cap_vector(), cap_vector(), "s");
    const ExpElement want = parse_exp("(1/32)*exp(2*s) - (1/32)*exp(-2*s) - (1/8)*s");
    if (!(got == want)) return mismatch("cap pairing", got.str(), want.str());
    return got == parse_exp("(sinh(2*s) - 2*s)/16") ? std::string() : std::string("sinh form differs");
  });
  s.check("k3-structure", 5, "DD(t Sigma) = cosh t sinh t on the K3 example", [k3] {
    const ExpElement got = dd_eval(k3, probe("t", k3.owner.sigma));
    const ExpElement want = parse_exp("sinh(2*t)/2");
    return got == want ? "" : mismatch("DD(t Sigma)", got.str(), want.str());
  });
  s.check("k3-sigma-powers", 5, "D^w(Sigma^{3+4n}) = 2^{2+4n} for n = 0..3", [k3] {
    const ExpElement dw = dw_eval(k3, probe("s", k3.owner.sigma));
    for (unsigned n = 0; n < 4; ++n) {
      const unsigned deg = 3 + 4 * n;
      const ExpElement got = dw.taylor_coefficient("s", deg).scaled(GaussRat(factorial(deg)));
      const GaussRat want = GaussRat(2).pow(static_cast<long>(2 + 4 * n));
      if (!(got == ExpElement(want))) return mismatch("D^w(Sigma^" + std::to_string(deg) + ")", got.str(), want.str());
    }
    return std::string();
  });
  s.check("k3-scale", 5, "a^4 * 16^2 = 16 gives mu(Sigma) = h/2", [k3] {
    const ExpElement dw = dw_eval(k3, probe("s", k3.owner.sigma));
    const GaussRat d3 = dw.taylor_coefficient("s", 3).scaled(GaussRat(factorial(3))).constant_value();
    const GaussRat d7 = dw.taylor_coefficient("s", 7).scaled(GaussRat(factorial(7))).constant_value();
    const Rational a = sigma_scale_from_invariants(d3, d7);
    if (a != Rational(1, 2)) return mismatch("scale", a.get_str(), "1/2");
    return RatClass::h().scaled(GaussRat(a)) == mu_sigma() ? std::string() : std::string("mu(Sigma) != h/2");
  });
  s.check("mu-x-oracle", 6, "D_X(Sigma x) = 2 on the K3 example through the cap", [k3, &s] {
    const RelVector phi = relative_from_closed(k3, {}, CycleMonomial{1, 0});
    const ExpElement got = pair_relative(phi, cap_vector(CycleMonomial{0, 1}, s.opts.mu_x), "s").at_zero("s");
    const ExpElement direct =
        dx_eval(k3, probe("s", k3.owner.sigma), 1).taylor_coefficient("s", 1);
    if (!(direct == ExpElement(2))) return mismatch("closed D_X(Sigma x)", direct.str(), "2");
    return got == ExpElement(2) ? "" : mismatch("D_X(Sigma x) through the cap", got.str(), "2");
  });
  s.check("mu-x-alternatives", 6, "the printed mu(x) and the opposite sign both miss 2", [k3] {
    const RelVector phi = relative_from_closed(k3, {}, CycleMonomial{1, 0});
    for (const MuXConvention c : {MuXConvention::Printed, MuXConvention::OppositeSign}) {
      const ExpElement got = pair_relative(phi, cap_vector(CycleMonomial{0, 1}, c), "s").at_zero("s");
      if (got == ExpElement(2)) return std::string("an alternative mu(x) passes the oracle");
    }
    return std::string();
  });
}

void gluing_checks(Suite& s, Sampler& rng) {
  const StructureSeries k3 = reference_k3_blowup();
  s.check("sector-coefficients", 7, "32ab, -32ab and 0 by both routes in every sector", [&] {
    for (unsigned n = 0; n < s.count(); ++n) {
      const GaussRat a = rng.rational();
      const GaussRat b = rng.rational();
      for (const long ks : {-2L, 0L, 2L}) {
        for (const long ls : {-2L, 0L, 2L}) {
          const GaussRat want = (ks == 2 && ls == 2)     ? GaussRat(32) * a * b
                                : (ks == -2 && ls == -2) ? GaussRat(-32) * a * b
                                                         : GaussRat(0);
          if (!(sector_coefficient(ks, ls, a, b) == want)) return std::string("sector rule differs");
          const GaussRat c = contraction_coefficient(ks, ls, a, b);
          if (!(c == want)) {
            return mismatch("contraction (" + std::to_string(ks) + "," + std::to_string(ls) + ")", c.str(), want.str());
          }
        }
      }
    }
    return std::string();
  });
  s.check("glue-k3-rules", 7, "two K3 sides give exactly the rules +2 and -2", [k3] {
    const GlueInput in = make_glue_input({k3, std::nullopt}, {k3, std::nullopt});
    const GlueReport r = sum_rules(in);
    std::vector<std::string> sums;
    for (const SumRule& rule : r.rules) {
      if (!rule.sum.is_zero()) sums.push_back(rule_case_name(rule.kind) + ":" + rule.sum.str());
    }
    std::sort(sums.begin(), sums.end());
    const std::vector<std::string> want{"minus:-2", "plus:2"};
    if (sums != want) return std::string("nonzero rules differ");
    const ExpElement on_sigma = glued_eval(in, GluedProbe{{}, {}, std::nullopt, "s"});
    const ExpElement expect = parse_exp("2*exp(2*s) - 2*exp(-2*s)");
    return on_sigma == expect ? "" : mismatch("DD_X(s Sigma)", on_sigma.str(), expect.str());
  });
  s.check("neck-matrix", 7, "the cap gives diag(32, -32, 0) on the neck", [] {
    const RatMatrix u = u_matrix(cap_parameters());
    if (!(u(0, 0) == GaussRat(32)) || !(u(1, 1) == GaussRat(-32)) || !u(2, 2).is_zero()) {
      return mismatch("U at the cap", to_string(u), "diag(32, -32, 0, .)");
    }
    return std::string();
  });
  s.check("glue-with-d", 7, "DD_X(tD) = 2e^{2t} - 2e^{-2t}, symmetric in s and t", [k3] {
    const GlueInput in = make_glue_input({k3, std::nullopt}, {k3, std::nullopt});
    const ExpElement plain = glue_with_d(in, "t");
    const ExpElement want = parse_exp("2*exp(2*t) - 2*exp(-2*t)");
    if (!(plain == want)) return mismatch("DD_X(tD)", plain.str(), want.str());
    const ExpElement full = glue_with_d(in, "t", Var("s"));
    const ExpElement want_full = parse_exp("exp(t*s)*(2*exp(2*s + 2*t) - 2*exp(-2*s - 2*t))");
    if (!(full == want_full)) return mismatch("DD_X(sSigma + tD)", full.str(), want_full.str());
    if (!(glue_with_d(in, "s", Var("t")) == full)) return std::string("not symmetric under s <-> t");
    const ExpElement kappa_route = glued_eval(in, GluedProbe{{}, {}, "t", "s"});
    if (!(kappa_route == full)) return mismatch("kappa route", kappa_route.str(), full.str());
    // t = 0 gives the sum of the sector sums.
    GaussRat total(0);
    for (const SumRule& r : sum_rules(in).rules) total += r.sum;
    return plain.at_zero("t") == ExpElement(total) ? std::string() : std::string("t = 0 disagrees with the rules");
  });
  s.check("glued-simple-type", 8, "glued series has no s e^{ts} part", [k3] {
    const GlueInput in = make_glue_input({k3, std::nullopt}, {k3, std::nullopt});
    const ExpElement full = glue_with_d(in, "t", Var("s"));
    if (!full.extract("s", 1, Polynomial::variable("t")).is_zero()) return std::string("s e^{ts} term present");
    return simple_type_shape(full, "s") ? std::string() : std::string("polynomial factor in s");
  });
  s.check("relative-simple-type", 8, "relative vectors of simple-type sides satisfy phi_3 = 16 phi_1", [k3, &rng, &s] {
    for (unsigned a = 0; a < 4; ++a) {
      for (unsigned b = 0; b < 2; ++b) {
        const RelVector phi = relative_from_closed(k3, {}, CycleMonomial{a, b});
        if (!(phi[3] == phi[1].scaled(GaussRat(16)))) {
          return "fails for Sigma^" + std::to_string(a) + " x^" + std::to_string(b);
        }
      }
    }
    ManifoldDescriptor m = k3.owner;
    for (unsigned n = 0; n < s.count(); ++n) {
      const StructureSeries series = random_series(rng, m);
      const Probe alpha = probe("t", {0, 1, -1, 0});
      const RelVector phi = relative_from_closed(series, alpha);
      if (!(phi[3] == phi[1].scaled(GaussRat(16)))) return std::string("fails on a random series");
    }
    return std::string();
  });
}

void witten_checks(Suite& s, Sampler& rng) {
  const StructureSeries k3 = reference_k3_blowup();
  s.check("witten-k3", 9, "the Witten formula reproduces the K3 coefficients", [k3] {
    for (const BasicClass& b : k3.classes) {
      const GaussRat got = witten_coefficient(k3.owner, b.k, *b.sw);
      if (!(got == b.coeff)) return mismatch("coefficient", got.str(), b.coeff.str());
    }
    return std::string();
  });
  s.check("topology-compose", 9, "two K3 sides compose to chi = 56, sigma = -36, b+ = 9", [k3] {
    const ComposedTopology t = topology_compose(k3.owner, k3.owner);
    if (t.euler != 56 || t.signature != -36 || t.b_plus != 9 || t.d0_parity != 1) {
      return std::string("composed topology differs");
    }
    return std::string();
  });
  s.check("exponent-shift", 9, "the Witten power of 2 grows by 5 under genus-2 fiber sums", [&] {
    const ComposedTopology t = topology_compose(k3.owner, k3.owner);
    const long shift = witten_exponent(t.euler, t.signature) - 2 * witten_exponent(k3.owner.euler, k3.owner.signature);
    if (shift != 5) return mismatch("shift", std::to_string(shift), "5");
    for (unsigned n = 0; n < s.count(); ++n) {
      // 7 chi + 11 sigma = 0 (mod 4) with chi + sigma even.
      ManifoldDescriptor a = k3.owner;
      ManifoldDescriptor b = k3.owner;
      a.euler = 26 + 4 * rng.integer(-5, 5);
      a.signature = -18 + 4 * rng.integer(-5, 5);
      b.euler = 26 + 4 * rng.integer(-5, 5);
      b.signature = -18 + 4 * rng.integer(-5, 5);
      const ComposedTopology c = topology_compose(a, b);
      const long d = witten_exponent(c.euler, c.signature) - witten_exponent(a.euler, a.signature) -
                     witten_exponent(b.euler, b.signature);
      if (d != 5) return "shift " + std::to_string(d) + " at chi = " + std::to_string(a.euler);
    }
    return std::string();
  });
  s.check("witten-glue", 9, "|32ab| matches the Witten coefficient of the fiber sum", [k3] {
    const GlueInput in = make_glue_input({k3, std::nullopt}, {k3, std::nullopt});
    const auto checks = witten_glue_check(in);
    if (checks.empty()) return std::string("no classes with SW data");
    for (const WittenCheck& w : checks) {
      if (!w.passed) return mismatch("squared magnitude", w.glued.get_str(), w.witten.get_str());
    }
    return std::string();
  });
  s.check("predict-coefficient", 9, "predicted coefficient 2^{7g-9} for g = 2..6", [] {
    for (long g = 2; g <= 6; ++g) {
      const Prediction p = predict_coefficient(g);
      Integer want;
      mpz_ui_pow_ui(want.get_mpz_t(), 2, static_cast<unsigned long>(7 * g - 9));
      if (p.value != want || p.theorem != (g == 2)) return "wrong prediction at g = " + std::to_string(g);
    }
    if (predict_coefficient(2).value != 32) return std::string("g = 2 is not 32");
    try {
      predict_coefficient(1);
      return std::string("g = 1 accepted");
    } catch (const Error& e) {
      if (e.code() != Errc::OutOfDomain) throw;
    }
    return std::string();
  });
}

void series_checks(Suite& s, Sampler& rng) {
  const StructureSeries k3 = reference_k3_blowup();
  s.check("change-w-involution", 10, "changing w and back is the identity", [&] {
    for (unsigned n = 0; n < s.count(); ++n) {
      const StructureSeries series = random_series(rng, k3.owner);
      IntVec w;
      do {
        w = {rng.integer(-3, 3), rng.integer(-3, 3), rng.integer(-3, 3), rng.integer(-3, 3)};
      } while (((k3.owner.lattice.pair(w, k3.owner.sigma) % 2) + 2) % 2 != 1);
      const StructureSeries back = change_w(change_w(series, w), series.owner.w);
      if (!same_series(back, series)) return std::string("change_w twice differs");
    }
    return std::string();
  });
  s.check("k3-change-w", 10, "K3 with w = E2 is e^{Q/2} cosh E1 sinh E2", [k3] {
    const StructureSeries moved = change_w(k3, {0, 0, 1, 0});
    StructureSeries want = k3;
    want.classes = {{{0, 1, 1, 0}, GaussRat::fraction(1, 4), std::nullopt},
                    {{0, 1, -1, 0}, GaussRat::fraction(-1, 4), std::nullopt},
                    {{0, -1, 1, 0}, GaussRat::fraction(1, 4), std::nullopt},
                    {{0, -1, -1, 0}, GaussRat::fraction(-1, 4), std::nullopt}};
    return same_series(moved, want) ? std::string() : std::string("re-signed series differs");
  });
  s.check("round-trip", 10, "the combined series determines the structure series", [&] {
    const std::vector<Var> vars{"a", "b", "c", "d"};
    for (unsigned n = 0; n < s.count(); ++n) {
      const StructureSeries series = random_series(rng, k3.owner);
      Probe alpha;
      for (std::size_t i = 0; i < vars.size(); ++i) alpha = alpha + probe(vars[i], k3.owner.lattice.basis_vector(i));
      const StructureSeries back = recover_series(dx_eval(series, alpha), series.owner, vars);
      if (!same_series(back, series)) return std::string("recovered series differs");
    }
    return std::string();
  });
  s.check("adjunction-frequencies", 10, "DD(t Sigma) only has frequencies in {-2, 0, 2}", [&] {
    for (unsigned n = 0; n < s.count(); ++n) {
      const StructureSeries series = random_series(rng, k3.owner);
      for (const auto& sec : dd_eval(series, probe("t", k3.owner.sigma)).sections("t")) {
        const GaussRat f = sec.freq.constant_term();
        if (!sec.freq.is_zero() && sec.freq.degree() > 0) return std::string("non-constant frequency");
        if (!(f == GaussRat(2) || f == GaussRat(-2) || f.is_zero())) return "frequency " + f.str();
      }
    }
    return std::string();
  });
}

}  // namespace

const std::vector<std::string>& conformance_sections() {
  static const std::vector<std::string> names{"ring", "matrices", "cap", "gluing", "witten", "series"};
  return names;
}

std::vector<CheckResult> run_conformance(const VerifyOptions& opts) {
  const auto& all = conformance_sections();
  for (const std::string& name : opts.sections) {
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw Error(Errc::InvalidArgument, "unknown section '" + name + "'");
    }
  }
  std::vector<CheckResult> out;
  Sampler rng(opts.seed);
  auto wanted = [&](const std::string& name) {
    return opts.sections.empty() || std::find(opts.sections.begin(), opts.sections.end(), name) != opts.sections.end();
  };
  const std::vector<std::pair<std::string, std::function<void(Suite&)>>> runners{
      {"ring", [&](Suite& s) { ring_checks(s, rng); }},
      {"matrices", [&](Suite& s) { matrix_checks(s, rng); }},
      {"cap", [&](Suite& s) { cap_checks(s); }},
      {"gluing", [&](Suite& s) { gluing_checks(s, rng); }},
      {"witten", [&](Suite& s) { witten_checks(s, rng); }},
      {"series", [&](Suite& s) { series_checks(s, rng); }},
  };
  for (const auto& [name, run] : runners) {
    if (!wanted(name)) continue;
    Suite suite{opts, out, name};
    run(suite);
  }
  return out;
}

StructureSeries reference_k3_blowup() {
  ManifoldDescriptor m;
  m.name = "K3#2CP2bar";
  m.lattice = Lattice(4, {2, 0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0});
  m.sigma = {1, -1, -1, 0};
  m.w = {0, 1, 0, 0};
  m.dbar = IntVec{0, 0, 0, 1};
  m.b_plus = 3;
  m.b1 = 0;
  m.euler = 26;
  m.signature = -18;
  m.genus = 2;
  m.simple_type = true;
  m.classes["S"] = {1, 0, 0, 0};
  m.classes["E1"] = {0, 1, 0, 0};
  m.classes["E2"] = {0, 0, 1, 0};
  const GaussRat q = GaussRat::fraction(1, 4);
  const GaussRat sw(-1);
  return StructureSeries{m,
                         {{{0, 1, 1, 0}, q, sw},
                          {{0, 1, -1, 0}, q, sw},
                          {{0, -1, 1, 0}, -q, sw},
                          {{0, -1, -1, 0}, -q, sw}}};
}

}  // namespace donsum
