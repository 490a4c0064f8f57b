#include <gtest/gtest.h>

#include "donsum/errors.hpp"
#include "donsum/exppoly.hpp"
#include "donsum/gaussrat.hpp"
#include "donsum/matrix.hpp"
#include "support.hpp"

namespace donsum {
namespace {

using test::Gen;
using test::numeric;

ExpElement E(const char* text) { return parse_exp(text); }

TEST(GaussRat, CanonicalForm) {
  const GaussRat a = GaussRat::fraction(6, -4);
  EXPECT_EQ(a.re(), Rational(-3, 2));
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ((GaussRat::i() * GaussRat::i()), GaussRat(-1));
  EXPECT_EQ(parse_gaussrat("1/2+3/4*i"), GaussRat(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(GaussRat::i_pow(-5), -GaussRat::i());
}

TEST(GaussRat, DivisionByZeroThrows) {
  try {
    (void)(GaussRat(1) / GaussRat(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(ExpElement, ExponentsCancel) { EXPECT_EQ(E("s*exp(2*s)") * E("exp(-2*s)"), E("s")); }

TEST(ExpElement, ChainRuleOnCrossTerm) { EXPECT_EQ(E("exp(t*s)").derive("s"), E("t*exp(t*s)")); }

TEST(ExpElement, HyperbolicIdentity) {
  const ExpElement c = E("(exp(2*s) + exp(-2*s))/2");
  const ExpElement sh = E("(exp(2*s) - exp(-2*s))/2");
  EXPECT_EQ(c * c - sh * sh, ExpElement(1));
}

TEST(ExpElement, SinhCoshSugar) { EXPECT_EQ(E("sinh(2*s)/2"), E("(1/4)*exp(2*s) - (1/4)*exp(-2*s)")); }

TEST(ExpElement, CanonicalRendering) {
  EXPECT_EQ(E("-s/8 + (1/32)*exp(2*s) - (1/32)*exp(-2*s)").str(), "(1/32)*exp(2*s) - (1/32)*exp(-2*s) - (1/8)*s");
  EXPECT_EQ(ExpElement().str(), "0");
}

TEST(ExpElement, ConstantExponentRejected) { EXPECT_THROW(E("exp(1 + s)"), Error); }

TEST(ExpElement, ExtractExamples) {
  const ExpElement a = E("(1/32)*exp(2*s) - (1/32)*exp(-2*s) - s/8");
  EXPECT_EQ(a.extract("s", 1, Polynomial(0)), ExpElement(GaussRat::fraction(-1, 8)));
  EXPECT_EQ(a.extract("s", 0, Polynomial(2)), ExpElement(GaussRat::fraction(1, 32)));
  EXPECT_EQ(ExpElement().extract("s", 0, Polynomial(0)), ExpElement());
}

TEST(ExpElement, ExtractRejectsQuadratic) {
  try {
    (void)E("exp(s^2)").extract("s", 0, Polynomial(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::QuadraticInVar);
  }
}

TEST(ExpElement, TaylorCoefficientsOfSinh) {
  // sinh(2s)/2 = s + (2/3) s^3 + ...
  const ExpElement f = E("sinh(2*s)/2");
  EXPECT_EQ(f.taylor_coefficient("s", 1), ExpElement(1));
  EXPECT_EQ(f.taylor_coefficient("s", 2), ExpElement());
  EXPECT_EQ(f.taylor_coefficient("s", 3), ExpElement(GaussRat::fraction(2, 3)));
}

TEST(Matrix, PairingInverse) {
  const RatMatrix m{{0, 0, 0, 4}, {0, 0, 4, 0}, {0, 4, 0, 64}, {4, 0, 64, 0}};
  const RatMatrix want = RatMatrix{{0, -16, 0, 1}, {-16, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}.scaled(
      GaussRat::fraction(1, 4));
  EXPECT_EQ(mat_inv(m), want);
  EXPECT_EQ(mat_inv(RatMatrix::identity(3)), RatMatrix::identity(3));
}

TEST(Matrix, SingularThrows) {
  try {
    (void)mat_inv(RatMatrix(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
}

// ---- properties on random instances

ExpElement random_element(Gen& g) {
  static const char* vars[] = {"s", "t"};
  ExpElement out;
  const long n = g.integer(0, 3);
  for (long k = 0; k < n; ++k) {
    const Polynomial expo = Polynomial(g.rational()) * Polynomial::variable(vars[g.integer(0, 1)]) +
                            (g.integer(0, 2) == 0 ? Polynomial(g.rational()) * Polynomial::variable("s") *
                                                        Polynomial::variable("t")
                                                  : Polynomial(0));
    const Monomial mono = Monomial::of("s", static_cast<unsigned>(g.integer(0, 2))) *
                          Monomial::of("t", static_cast<unsigned>(g.integer(0, 1)));
    out += ExpElement::term(g.rational(true), mono, expo);
  }
  return out;
}

TEST(ExpElementProperty, RingLaws) {
  Gen g(11);
  for (int n = 0; n < test::kInstances; ++n) {
    const ExpElement a = random_element(g), b = random_element(g), c = random_element(g);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, ExpElement());
  }
}

TEST(ExpElementProperty, LeibnizRule) {
  Gen g(12);
  for (int n = 0; n < test::kInstances; ++n) {
    const ExpElement a = random_element(g), b = random_element(g);
    ASSERT_EQ((a + b).derive("s"), a.derive("s") + b.derive("s"));
    ASSERT_EQ((a * b).derive("s"), a.derive("s") * b + a * b.derive("s"));
  }
}

TEST(ExpElementProperty, AgreesWithFloatingEvaluation) {
  Gen g(13);
  for (int n = 0; n < test::kInstances; ++n) {
    const ExpElement a = random_element(g), b = random_element(g);
    const test::Point at{{"s", 0.3}, {"t", -0.7}};
    const auto want = numeric(a, at) * numeric(b, at);
    ASSERT_LT(std::abs(numeric(a * b, at) - want), 1e-9 * (1 + std::abs(want)));
  }
}

TEST(ExpElementProperty, ExtractionReconstructs) {
  Gen g(14);
  for (int n = 0; n < test::kInstances; ++n) {
    // Linear in s: no s*t cross terms would still be fine, but s^2 exponents are excluded.
    const ExpElement a = random_element(g);
    ExpElement rebuilt;
    for (const auto& sec : a.sections("s")) {
      const ExpElement part = a.extract("s", sec.power, sec.freq);
      rebuilt += part * ExpElement::term(1, Monomial::of("s", sec.power), sec.freq * Polynomial::variable("s"));
    }
    ASSERT_EQ(rebuilt, a);
  }
}

TEST(ExpElementProperty, ParsePrintRoundTrip) {
  Gen g(15);
  for (int n = 0; n < test::kInstances; ++n) {
    const ExpElement a = random_element(g);
    ASSERT_EQ(parse_exp(a.str()), a) << a.str();
  }
}

TEST(MatrixProperty, InverseRoundTrip) {
  Gen g(16);
  int done = 0;
  while (done < test::kInstances) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = g.rational();
    if (determinant(m).is_zero()) continue;
    ASSERT_EQ(m * mat_inv(m), RatMatrix::identity(n));
    ++done;
  }
}

}  // namespace
}  // namespace donsum
