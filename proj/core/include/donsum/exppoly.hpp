#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "donsum/gaussrat.hpp"

namespace donsum {

using Var = std::string;

/// Product of formal variables with positive integer powers, kept sorted by
/// variable name.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(const Var& v, unsigned power = 1);

  unsigned power(const Var& v) const;
  unsigned degree() const;
  bool is_one() const noexcept { return powers_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial without(const Var& v) const;
  /// Power of `v` decreased by one; `v` must occur.
  Monomial lowered(const Var& v) const;

  const std::vector<std::pair<Var, unsigned>>& powers() const noexcept { return powers_; }

  /// "s^2*t"; empty string for the unit monomial.
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Var, unsigned>> powers_;
};

/// Graded lexicographic comparison: positive when `a` ranks above `b`
/// (higher total degree first, then larger power of the earliest variable).
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Polynomial with Gaussian-rational coefficients. Used for the exponents of
/// ExpElement terms and for linear frequency forms.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussRat, GrlexDescending>;

  Polynomial() = default;
  Polynomial(const GaussRat& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(const Var& v);
  static Polynomial monomial(const GaussRat& c, const Monomial& m);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(unsigned n) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;
  unsigned degree_in(const Var& v) const;
  GaussRat coefficient(const Monomial& m) const;
  GaussRat constant_term() const { return coefficient(Monomial{}); }
  bool contains(const Var& v) const { return degree_in(v) > 0; }

  Polynomial derivative(const Var& v) const;
  /// Writes p = rest + v * slope with neither part containing `v`; requires
  /// degree_in(v) <= 1.
  std::pair<Polynomial, Polynomial> split_linear(const Var& v) const;

  const TermMap& terms() const noexcept { return terms_; }
  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Total order matching the printing order: negative when `a` prints first.
  friend int print_compare(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Monomial& m, const GaussRat& c);
  TermMap terms_;
};

/// Finite sum of coeff * monomial * exp(expo), with expo a polynomial of
/// degree at most two and zero constant term. Kept in normal form: no two
/// terms share (expo, mono) and no coefficient is zero.
class ExpElement {
 public:
  struct Term {
    GaussRat coeff;
    Monomial mono;
    Polynomial expo;
  };

  /// (power of the variable, frequency) pair identifying one term family
  /// var^power * exp(freq * var).
  struct Section {
    unsigned power;
    Polynomial freq;
  };

  ExpElement() = default;
  ExpElement(const GaussRat& c);  // NOLINT(google-explicit-constructor)
  ExpElement(long c) : ExpElement(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)

  static ExpElement variable(const Var& v);
  static ExpElement from_polynomial(const Polynomial& p);
  /// exp(expo); throws InvalidArgument for degree > 2 or a constant term.
  static ExpElement exp(const Polynomial& expo);
  static ExpElement term(const GaussRat& c, const Monomial& m, const Polynomial& expo);

  ExpElement& operator+=(const ExpElement& o);
  ExpElement& operator-=(const ExpElement& o);
  ExpElement& operator*=(const ExpElement& o);
  friend ExpElement operator+(ExpElement a, const ExpElement& b) { return a += b; }
  friend ExpElement operator-(ExpElement a, const ExpElement& b) { return a -= b; }
  friend ExpElement operator*(const ExpElement& a, const ExpElement& b);
  ExpElement operator-() const;
  ExpElement scaled(const GaussRat& c) const;
  ExpElement pow(unsigned n) const;

  /// d/dv by the product rule; the exponent contributes its gradient.
  ExpElement derive(const Var& v) const;

  /// Coefficient of v^power * exp(freq * v). `freq` must not contain `v`.
  /// Throws QuadraticInVar if some exponent has a v^2 or higher term.
  ExpElement extract(const Var& v, unsigned power, const Polynomial& freq) const;
  /// All (power, freq) families in which `v` occurs, in a fixed order.
  std::vector<Section> sections(const Var& v) const;
  /// Coefficient of v^n in the Taylor expansion about v = 0.
  ExpElement taylor_coefficient(const Var& v, unsigned n) const;
  /// Value at v = 0.
  ExpElement at_zero(const Var& v) const { return taylor_coefficient(v, 0); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Throws InvalidArgument if the element is not a constant.
  GaussRat constant_value() const;
  std::size_t size() const noexcept { return terms_.size(); }
  std::vector<Term> terms() const;
  std::set<Var> variables() const;

  /// Canonical text, e.g. "(1/32)*exp(2*s) - (1/8)*s". Parsable by parse_exp.
  std::string str() const;

  friend bool operator==(const ExpElement& a, const ExpElement& b);

 private:
  struct Key {
    Polynomial expo;
    Monomial mono;
  };
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const;
  };
  void add_term(const Polynomial& expo, const Monomial& mono, const GaussRat& c);

  std::map<Key, GaussRat, KeyOrder> terms_;
};

std::ostream& operator<<(std::ostream& os, const ExpElement& e);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses the canonical grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (('*'|'/') power)*
///   power  := atom ['^' digits]
///   atom   := digits | 'i' | ident | fn '(' expr ')' | '(' expr ')'
///   fn     := 'exp' | 'sinh' | 'cosh'
/// Division is by nonzero constants only; exp arguments must be polynomials
/// of degree <= 2 without constant term. Throws Error(Errc::Parse).
ExpElement parse_exp(std::string_view text);

/// Parses a constant (e.g. a coefficient string "1/2+3/4*i").
GaussRat parse_gaussrat(std::string_view text);

}  // namespace donsum
