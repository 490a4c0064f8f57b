#include <gtest/gtest.h>

#include "donsum/errors.hpp"
#include "donsum/floerpair.hpp"
#include "support.hpp"

namespace donsum {
namespace {

using test::Gen;
using test::k3;

ExpElement E(const char* text) { return parse_exp(text); }

TEST(FloerPair, BMatrixEntries) {
  const ExpMatrix b = b_matrix("s");
  EXPECT_EQ(b(1, 1), E("-2*s"));
  EXPECT_EQ(b(2, 2), E("sinh(2*s)/16"));
  EXPECT_EQ(b(3, 3), E("(sinh(2*s) - 2*s)/256"));
  EXPECT_EQ(b(2, 3), E("(cosh(2*s) - 1)/64"));
  EXPECT_EQ(b(0, 3), E("1/4"));
  EXPECT_EQ(b(0, 1), E("-4"));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(b(i, j), b(j, i));
      EXPECT_EQ(b(i, j).at_zero("s"), ExpElement(dual_pairing()(i, j)));
    }
}

TEST(FloerPair, AMatrixEntriesAndZero) {
  const std::array<GaussRat, 4> psi{1, 2, 3, 5};
  const RatMatrix a = a_matrix(psi);
  EXPECT_EQ(a(0, 2), (GaussRat(4) * psi[3] + GaussRat(16) * psi[2]) / GaussRat(512));
  EXPECT_EQ(a_matrix(std::array<GaussRat, 4>{0, 0, 0, 0}), RatMatrix(4, 4));
}

TEST(FloerPair, UMatrixAtCapPoint) {
  const RatMatrix u = u_matrix({0, 0, 0, 4});
  EXPECT_EQ(u(0, 0), GaussRat(32));
  EXPECT_EQ(u(1, 1), GaussRat(-32));
}

TEST(FloerPair, UMatrixSingularLocus) {
  for (const std::array<GaussRat, 4>& a :
       {std::array<GaussRat, 4>{0, 0, 1, 4}, {0, 0, 1, -4}, {0, 1, 5, 16}}) {
    try {
      (void)u_matrix(a);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SingularCap);
    }
  }
}

TEST(FloerPair, CapAgainstCap) {
  EXPECT_EQ(cap_parameters(), (std::array<GaussRat, 4>{0, 0, 0, 4}));
  EXPECT_EQ(pair_relative(cap_vector(), cap_vector(), "s"), E("(1/32)*exp(2*s) - (1/32)*exp(-2*s) - s/8"));
  const RelVector zero{};
  EXPECT_EQ(pair_relative(zero, cap_vector(), "s"), ExpElement());
}

TEST(FloerPair, RelativeVectorOfReference) {
  const RelVector phi = relative_from_closed(k3(), {}, CycleMonomial{1, 0});
  const RelVector want{ExpElement(1), ExpElement(0), ExpElement(16), ExpElement(0)};
  EXPECT_EQ(phi, want);
  const StructureSeries empty{k3().owner, {}};
  EXPECT_EQ(relative_from_closed(empty), RelVector{});
}

TEST(FloerPair, PointClassThroughCap) {
  const RelVector phi = relative_from_closed(k3(), {}, CycleMonomial{1, 0});
  auto through = [&](MuXConvention c) {
    return pair_relative(phi, cap_vector(CycleMonomial{0, 1}, c), "s").at_zero("s");
  };
  EXPECT_EQ(through(MuXConvention::Corrected), ExpElement(2));
  EXPECT_EQ(through(MuXConvention::Printed), ExpElement(-62));
  EXPECT_EQ(through(MuXConvention::OppositeSign), ExpElement(-2));
}

TEST(FloerPair, VVectorOfReference) {
  const StructureSeries s = k3();
  const CoefVector v = v_vector(s, *s.owner.dbar, "t");
  EXPECT_EQ(v[0], ExpElement(GaussRat::fraction(1, 4)));
  EXPECT_EQ(v[1], ExpElement(GaussRat::fraction(-1, 4)));
  EXPECT_EQ(v[2], ExpElement());
  EXPECT_EQ(v[3], ExpElement());
}

TEST(FloerPair, DbarNormalization) {
  const StructureSeries s = k3();
  EXPECT_THROW(normalize_dbar(s.owner, {1, 0, 0, 0}), Error);
}

// ---- properties

std::array<GaussRat, 4> random_vec(Gen& g) { return {g.rational(), g.rational(), g.rational(), g.rational()}; }

bool admissible(const std::array<GaussRat, 4>& a) {
  return !((a[3] - GaussRat(4) * a[2]) * (a[3] + GaussRat(4) * a[2]) * (a[3] - GaussRat(16) * a[1])).is_zero();
}

TEST(FloerPairProperty, AMatrixMatchesExtraction) {
  Gen g(41);
  for (int n = 0; n < test::kInstances; ++n) {
    const auto psi = random_vec(g);
    const RelVector lifted{psi[0], psi[1], psi[2], psi[3]};
    ASSERT_EQ(a_matrix_by_extraction(lifted, "s"), lift(a_matrix(psi)));
  }
}

TEST(FloerPairProperty, UMatrixConjugation) {
  Gen g(42);
  const RatMatrix target = dual_pairing();
  int done = 0;
  while (done < test::kInstances) {
    const auto a = random_vec(g);
    if (!admissible(a)) continue;
    const RatMatrix am = a_matrix(a);
    ASSERT_EQ(am.transpose() * u_matrix(a) * am, target);
    ASSERT_NE(am.transpose() * u_matrix_printed(a) * am, target);
    ++done;
  }
}

TEST(FloerPairProperty, DeterminantLocus) {
  Gen g(43);
  for (int n = 0; n < test::kInstances; ++n) {
    const auto a = random_vec(g);
    const GaussRat f = (a[3] - GaussRat(16) * a[1]);
    const GaussRat want = f * f * (GaussRat(4) * a[2] - a[3]) * (GaussRat(4) * a[2] + a[3]) / GaussRat(1048576);
    ASSERT_EQ(determinant(a_matrix(a)), want);
  }
}

TEST(FloerPairProperty, PairingIsBilinear) {
  Gen g(44);
  for (int n = 0; n < test::kInstances; ++n) {
    const auto p = random_vec(g), q = random_vec(g), r = random_vec(g);
    const GaussRat c = g.rational();
    const RelVector P{p[0], p[1], p[2], p[3]}, Q{q[0], q[1], q[2], q[3]}, R{r[0], r[1], r[2], r[3]};
    RelVector mix;
    for (std::size_t i = 0; i < 4; ++i) mix[i] = Q[i].scaled(c) + R[i];
    ASSERT_EQ(pair_relative(P, mix, "s"), pair_relative(P, Q, "s").scaled(c) + pair_relative(P, R, "s"));
    ASSERT_EQ(pair_relative(P, Q, "s"), pair_relative(Q, P, "s"));
  }
}

}  // namespace
}  // namespace donsum
