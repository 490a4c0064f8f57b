#include <algorithm>

#include <gtest/gtest.h>

#include "donsum/errors.hpp"
#include "donsum/kmseries.hpp"
#include "support.hpp"

namespace donsum {
namespace {

using test::Gen;
using test::k3;

bool has_code(const std::vector<Violation>& v, const std::string& code) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

GaussRat coefficient_of(const StructureSeries& s, const IntVec& k) {
  for (const BasicClass& b : s.classes)
    if (b.k == k) return b.coeff;
  return 0;
}

TEST(KmSeries, ReferenceManifoldIsValid) {
  const StructureSeries s = k3();
  EXPECT_TRUE(validate(s).empty());
  EXPECT_EQ(s.owner.d0(), -5);
  EXPECT_EQ(s.owner.lattice.square(s.owner.sigma), 0);
}

TEST(KmSeries, SigmaWithNonzeroSquareRejected) {
  StructureSeries s = k3();
  s.owner.sigma = {1, 0, 0, 0};
  EXPECT_TRUE(has_code(validate(s), "sigma self-intersection"));
}

TEST(KmSeries, AdjunctionViolationReported) {
  StructureSeries s = k3();
  s.classes.push_back({{0, 3, 0, 0}, 1, std::nullopt});
  EXPECT_TRUE(has_code(validate(s), "adjunction/parity"));
}

TEST(KmSeries, UnsuitableManifoldRejected) {
  StructureSeries s = k3();
  s.owner.b_plus = 2;
  EXPECT_TRUE(has_code(validate(s), "suitable"));
  EXPECT_THROW(require_valid(s), Error);
}

TEST(KmSeries, StructureSeriesOnSigma) {
  const StructureSeries s = k3();
  EXPECT_EQ(dd_eval(s, probe("t", s.owner.sigma)), parse_exp("sinh(2*t)/2"));
  EXPECT_EQ(dd_eval(StructureSeries{s.owner, {}}, probe("t", s.owner.sigma)), ExpElement());
}

TEST(KmSeries, SingleOrthogonalClass) {
  // K . alpha = 0 and Q(alpha) = 2 t^2 give a * exp(t^2).
  const StructureSeries s = k3();
  const StructureSeries one{s.owner, {{{0, 1, 1, 0}, GaussRat::fraction(3, 5), std::nullopt}}};
  const IntVec alpha{1, 0, 0, 0};  // S, with S^2 = 2 and (E1 + E2) . S = 0
  EXPECT_EQ(dd_eval(one, probe("t", alpha)), parse_exp("(3/5)*exp(t^2)"));
}

TEST(KmSeries, CombinedSeriesOnSigma) {
  const StructureSeries s = k3();
  const ExpElement dx = dx_eval(s, probe("s", s.owner.sigma));
  EXPECT_EQ(dx, parse_exp("sinh(2*s)/2"));
  EXPECT_EQ(dx.taylor_coefficient("s", 1), ExpElement(1));
}

TEST(KmSeries, CombinedSeriesWithPointClass) {
  const StructureSeries s = k3();
  const ExpElement dx = dx_eval(s, probe("s", s.owner.sigma), 1);
  EXPECT_EQ(dx.taylor_coefficient("s", 1), ExpElement(2));
}

TEST(KmSeries, SigmaPowers) {
  const StructureSeries s = k3();
  const ExpElement dw = dw_eval(s, probe("s", s.owner.sigma));
  // 3! * [s^3] and 7! * [s^7] of the combined series.
  EXPECT_EQ(dw.taylor_coefficient("s", 3).scaled(6), ExpElement(4));
  EXPECT_EQ(dw.taylor_coefficient("s", 7).scaled(5040), ExpElement(64));
}

TEST(KmSeries, ChangeWToSecondExceptional) {
  const StructureSeries s = k3();
  const StructureSeries t = change_w(s, {0, 0, 1, 0});
  // exp(Q/2) cosh E1 sinh E2.
  EXPECT_EQ(coefficient_of(t, {0, 1, 1, 0}), GaussRat::fraction(1, 4));
  EXPECT_EQ(coefficient_of(t, {0, 1, -1, 0}), GaussRat::fraction(-1, 4));
  EXPECT_EQ(coefficient_of(t, {0, -1, 1, 0}), GaussRat::fraction(1, 4));
  EXPECT_EQ(coefficient_of(t, {0, -1, -1, 0}), GaussRat::fraction(-1, 4));
  EXPECT_EQ(change_w(s, s.owner.w).classes.size(), s.classes.size());
}

TEST(KmSeries, ChangeWBySigmaDependsOnSector) {
  const StructureSeries s = k3();
  IntVec w = s.owner.w;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += s.owner.sigma[i];
  const StructureSeries t = change_w(s, w);
  EXPECT_EQ(coefficient_of(t, {0, 1, 1, 0}), coefficient_of(s, {0, 1, 1, 0}));    // K . Sigma = 2
  EXPECT_EQ(coefficient_of(t, {0, 1, -1, 0}), -coefficient_of(s, {0, 1, -1, 0}));  // K . Sigma = 0
}

TEST(KmSeries, WittenCoefficient) {
  EXPECT_EQ(witten_exponent(26, -18), -2);
  EXPECT_EQ(witten_exponent(56, -36), 1);
  EXPECT_THROW(witten_exponent(1, 0), Error);
  const StructureSeries s = k3();
  EXPECT_EQ(witten_coefficient(s.owner, {0, -1, 1, 0}, 1), GaussRat::fraction(1, 4));
  EXPECT_EQ(witten_coefficient(s.owner, {0, -1, 1, 0}, 0), GaussRat(0));
}

TEST(KmSeries, TopologyCompose) {
  const StructureSeries s = k3();
  const ComposedTopology t = topology_compose(s.owner, s.owner);
  EXPECT_EQ(t.euler, 56);
  EXPECT_EQ(t.signature, -36);
  EXPECT_EQ(t.b_plus, 9);
  ManifoldDescriptor other = s.owner;
  other.genus = 3;
  try {
    (void)topology_compose(s.owner, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GenusMismatch);
  }
}

TEST(KmSeries, SimpleTypeShape) {
  EXPECT_FALSE(simple_type_shape(parse_exp("(sinh(2*s) - 2*s)/16"), "s"));
  EXPECT_TRUE(simple_type_shape(parse_exp("2*exp(2*s) - 2*exp(-2*s)"), "s"));
  EXPECT_TRUE(simple_type_shape(ExpElement(), "s"));
}

// ---- properties

// Random series on the reference lattice: characteristic classes (even, odd, odd, even)
// inside the adjunction window |K . Sigma| <= 2.
StructureSeries random_series(Gen& g) {
  StructureSeries s = k3();
  s.classes.clear();
  const long n = g.integer(1, 4);
  for (long i = 0; i < n; ++i) {
    IntVec k{2 * g.integer(-1, 1), 2 * g.integer(-1, 1) + 1, 2 * g.integer(-1, 1) + 1, 2 * g.integer(-1, 1)};
    if (std::labs(s.owner.lattice.pair(k, s.owner.sigma)) > 2) continue;
    if (std::any_of(s.classes.begin(), s.classes.end(), [&](const BasicClass& b) { return b.k == k; })) continue;
    s.classes.push_back({k, g.rational(true), std::nullopt});
  }
  return s;
}

TEST(KmSeriesProperty, ChangeWInvolution) {
  Gen g(31);
  for (int n = 0; n < test::kInstances; ++n) {
    const StructureSeries s = random_series(g);
    IntVec w2 = s.owner.w;
    w2[2] += 2 * g.integer(-2, 2) + 1;  // keep w . Sigma odd
    w2[0] += 2 * g.integer(-1, 1);
    try {
      const StructureSeries back = change_w(change_w(s, w2), s.owner.w);
      for (const BasicClass& b : s.classes) ASSERT_EQ(coefficient_of(back, b.k), b.coeff);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::InvalidArgument);
    }
  }
}

TEST(KmSeriesProperty, CombinedSeriesRoundTrip) {
  Gen g(32);
  const std::vector<Var> vars{"a", "b", "c", "d"};
  for (int n = 0; n < test::kInstances; ++n) {
    const StructureSeries s = random_series(g);
    Probe alpha;
    for (std::size_t i = 0; i < vars.size(); ++i) alpha = alpha + probe(vars[i], s.owner.lattice.basis_vector(i));
    const StructureSeries back = recover_series(dx_eval(s, alpha), s.owner, vars);
    for (const BasicClass& b : s.classes) ASSERT_EQ(coefficient_of(back, b.k), b.coeff);
    ASSERT_EQ(back.classes.size(), s.classes.size());
  }
}

TEST(KmSeriesProperty, StructureSeriesAgreesWithDirectSum) {
  Gen g(33);
  for (int n = 0; n < test::kInstances; ++n) {
    const StructureSeries s = random_series(g);
    const IntVec alpha{g.integer(-2, 2), g.integer(-2, 2), g.integer(-2, 2), g.integer(-2, 2)};
    const double t = 0.2;
    std::complex<double> want = 0;
    const double q = s.owner.lattice.square(alpha) * t * t / 2;
    for (const BasicClass& b : s.classes)
      want += test::numeric(b.coeff) * std::exp(q + s.owner.lattice.pair(b.k, alpha) * t);
    const auto got = test::numeric(dd_eval(s, probe("t", alpha)), {{"t", t}});
    ASSERT_LT(std::abs(got - want), 1e-9 * (1 + std::abs(want)));
  }
}

}  // namespace
}  // namespace donsum
