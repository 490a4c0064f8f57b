#include "donsum/exppoly.hpp"

#include <algorithm>
#include <ostream>

#include "donsum/errors.hpp"

namespace donsum {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(const Var& v, unsigned power) {
  Monomial m;
  if (power > 0) m.powers_.emplace_back(v, power);
  return m;
}

unsigned Monomial::power(const Var& v) const {
  for (const auto& [name, p] : powers_) {
    if (name == v) return p;
  }
  return 0;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& entry : powers_) d += entry.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = powers_.begin();
  auto b = o.powers_.begin();
  while (a != powers_.end() || b != o.powers_.end()) {
    if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(const Var& v) const {
  Monomial out;
  for (const auto& entry : powers_) {
    if (entry.first != v) out.powers_.push_back(entry);
  }
  return out;
}

Monomial Monomial::lowered(const Var& v) const {
  Monomial out;
  for (const auto& [name, p] : powers_) {
    if (name != v) {
      out.powers_.emplace_back(name, p);
    } else if (p > 1) {
      out.powers_.emplace_back(name, p - 1);
    }
  }
  return out;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [name, p] : powers_) {
    if (!s.empty()) s += '*';
    s += name;
    if (p > 1) s += '^' + std::to_string(p);
  }
  return s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  // Walk the union of variables in name order; the first differing power decides.
  auto x = a.powers().begin();
  auto y = b.powers().begin();
  while (x != a.powers().end() || y != b.powers().end()) {
    if (y == b.powers().end() || (x != a.powers().end() && x->first < y->first)) return 1;
    if (x == a.powers().end() || y->first < x->first) return -1;
    if (x->second != y->second) return x->second > y->second ? 1 : -1;
    ++x;
    ++y;
  }
  return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const Var& v) { return monomial(GaussRat(1), Monomial::of(v)); }

Polynomial Polynomial::monomial(const GaussRat& c, const Monomial& m) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial out(GaussRat(1));
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& entry : terms_) d = std::max(d, entry.first.degree());
  return d;
}

unsigned Polynomial::degree_in(const Var& v) const {
  unsigned d = 0;
  for (const auto& entry : terms_) d = std::max(d, entry.first.power(v));
  return d;
}

GaussRat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRat(0) : it->second;
}

Polynomial Polynomial::derivative(const Var& v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const unsigned p = m.power(v);
    if (p > 0) out.add_term(m.lowered(v), c * GaussRat(static_cast<long>(p)));
  }
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::split_linear(const Var& v) const {
  Polynomial rest;
  Polynomial slope;
  for (const auto& [m, c] : terms_) {
    const unsigned p = m.power(v);
    if (p == 0) {
      rest.add_term(m, c);
    } else if (p == 1) {
      slope.add_term(m.without(v), c);
    } else {
      throw Error(Errc::QuadraticInVar, "exponent has degree " + std::to_string(p) + " in " + v);
    }
  }
  return {std::move(rest), std::move(slope)};
}

int print_compare(const Polynomial& a, const Polynomial& b) {
  auto x = a.terms_.begin();
  auto y = b.terms_.begin();
  for (; x != a.terms_.end() && y != b.terms_.end(); ++x, ++y) {
    const int m = grlex_compare(x->first, y->first);
    if (m != 0) return m > 0 ? -1 : 1;
    if (x->second != y->second) return x->second > y->second ? -1 : 1;
  }
  if (x == a.terms_.end() && y == b.terms_.end()) return 0;
  // A polynomial that runs out first prints later; the zero exponent is last.
  return x == a.terms_.end() ? 1 : -1;
}

// ------------------------------------------------------------- rendering

namespace {

struct Piece {
  bool negative;
  Rational magnitude;
  std::vector<std::string> factors;
};

void append_pieces(std::vector<Piece>& out, const GaussRat& c, std::vector<std::string> factors) {
  if (sgn(c.re()) != 0) out.push_back({sgn(c.re()) < 0, abs(c.re()), factors});
  if (sgn(c.im()) != 0) {
    factors.insert(factors.begin(), "i");
    out.push_back({sgn(c.im()) < 0, abs(c.im()), std::move(factors)});
  }
}

std::string join_pieces(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string s;
  bool first = true;
  for (const Piece& p : pieces) {
    if (first) {
      if (p.negative) s += '-';
    } else {
      s += p.negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const std::string& f : p.factors) {
      if (!body.empty()) body += '*';
      body += f;
    }
    if (body.empty()) {
      s += p.magnitude.get_str();
    } else if (p.magnitude == 1) {
      s += body;
    } else if (p.magnitude.get_den() == 1) {
      s += p.magnitude.get_str() + "*" + body;
    } else {
      s += "(" + p.magnitude.get_str() + ")*" + body;
    }
  }
  return s;
}

std::vector<std::string> mono_factors(const Monomial& m) {
  std::vector<std::string> f;
  for (const auto& [name, p] : m.powers()) f.push_back(p > 1 ? name + "^" + std::to_string(p) : name);
  return f;
}

}  // namespace

std::string Polynomial::str() const {
  std::vector<Piece> pieces;
  for (const auto& [m, c] : terms_) append_pieces(pieces, c, mono_factors(m));
  return join_pieces(pieces);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// -------------------------------------------------------------- ExpElement

bool ExpElement::KeyOrder::operator()(const Key& a, const Key& b) const {
  const int e = print_compare(a.expo, b.expo);
  if (e != 0) return e < 0;
  return grlex_compare(a.mono, b.mono) > 0;
}

ExpElement::ExpElement(const GaussRat& c) { add_term(Polynomial{}, Monomial{}, c); }

ExpElement ExpElement::variable(const Var& v) {
  return term(GaussRat(1), Monomial::of(v), Polynomial{});
}

ExpElement ExpElement::from_polynomial(const Polynomial& p) {
  ExpElement out;
  for (const auto& [m, c] : p.terms()) out.add_term(Polynomial{}, m, c);
  return out;
}

ExpElement ExpElement::exp(const Polynomial& expo) {
  if (expo.degree() > 2) {
    throw Error(Errc::InvalidArgument, "exponent " + expo.str() + " has degree above 2");
  }
  if (!expo.constant_term().is_zero()) {
    throw Error(Errc::InvalidArgument, "exponent " + expo.str() + " has a constant term");
  }
  return term(GaussRat(1), Monomial{}, expo);
}

ExpElement ExpElement::term(const GaussRat& c, const Monomial& m, const Polynomial& expo) {
  ExpElement out;
  out.add_term(expo, m, c);
  return out;
}

void ExpElement::add_term(const Polynomial& expo, const Monomial& mono, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{expo, mono}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpElement& ExpElement::operator+=(const ExpElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.expo, k.mono, c);
  return *this;
}

ExpElement& ExpElement::operator-=(const ExpElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.expo, k.mono, -c);
  return *this;
}

ExpElement operator*(const ExpElement& a, const ExpElement& b) {
  ExpElement out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.expo + kb.expo, ka.mono * kb.mono, ca * cb);
  }
  return out;
}

ExpElement& ExpElement::operator*=(const ExpElement& o) { return *this = *this * o; }

ExpElement ExpElement::operator-() const { return scaled(GaussRat(-1)); }

ExpElement ExpElement::scaled(const GaussRat& c) const {
  ExpElement out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

ExpElement ExpElement::pow(unsigned n) const {
  ExpElement out(GaussRat(1));
  ExpElement base = *this;
  while (n > 0) {
    if (n & 1U) out = out * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return out;
}

ExpElement ExpElement::derive(const Var& v) const {
  ExpElement out;
  for (const auto& [k, c] : terms_) {
    const unsigned p = k.mono.power(v);
    if (p > 0) out.add_term(k.expo, k.mono.lowered(v), c * GaussRat(static_cast<long>(p)));
    const Polynomial grad = k.expo.derivative(v);
    for (const auto& [dm, dc] : grad.terms()) out.add_term(k.expo, k.mono * dm, c * dc);
  }
  return out;
}

ExpElement ExpElement::extract(const Var& v, unsigned power, const Polynomial& freq) const {
  if (freq.contains(v)) throw Error(Errc::InvalidArgument, "frequency form contains " + v);
  ExpElement out;
  for (const auto& [k, c] : terms_) {
    auto [rest, slope] = k.expo.split_linear(v);
    if (k.mono.power(v) == power && slope == freq) out.add_term(rest, k.mono.without(v), c);
  }
  return out;
}

std::vector<ExpElement::Section> ExpElement::sections(const Var& v) const {
  std::vector<Section> out;
  for (const auto& entry : terms_) {
    const Key& k = entry.first;
    Polynomial slope = k.expo.split_linear(v).second;
    const unsigned p = k.mono.power(v);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Section& s) {
      return s.power == p && s.freq == slope;
    });
    if (!seen) out.push_back({p, std::move(slope)});
  }
  std::sort(out.begin(), out.end(), [](const Section& a, const Section& b) {
    const int c = print_compare(a.freq, b.freq);
    if (c != 0) return c < 0;
    return a.power > b.power;
  });
  return out;
}

ExpElement ExpElement::taylor_coefficient(const Var& v, unsigned n) const {
  ExpElement out;
  for (const auto& [k, c] : terms_) {
    auto [rest, slope] = k.expo.split_linear(v);
    const unsigned p = k.mono.power(v);
    if (n < p) continue;
    const unsigned j = n - p;
    const GaussRat scale = c / GaussRat(factorial(j));
    const Monomial base = k.mono.without(v);
    const Polynomial power = slope.pow(j);
    for (const auto& [m, pc] : power.terms()) out.add_term(rest, base * m, scale * pc);
  }
  return out;
}

bool ExpElement::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Key& k = terms_.begin()->first;
  return k.expo.is_zero() && k.mono.is_one();
}

GaussRat ExpElement::constant_value() const {
  if (!is_constant()) throw Error(Errc::InvalidArgument, "not a constant: " + str());
  return terms_.empty() ? GaussRat(0) : terms_.begin()->second;
}

std::vector<ExpElement::Term> ExpElement::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({c, k.mono, k.expo});
  return out;
}

std::set<Var> ExpElement::variables() const {
  std::set<Var> vars;
  for (const auto& entry : terms_) {
    for (const auto& pw : entry.first.mono.powers()) vars.insert(pw.first);
    for (const auto& em : entry.first.expo.terms()) {
      for (const auto& pw : em.first.powers()) vars.insert(pw.first);
    }
  }
  return vars;
}

bool operator==(const ExpElement& a, const ExpElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto x = a.terms_.begin();
  for (auto y = b.terms_.begin(); y != b.terms_.end(); ++x, ++y) {
    if (!(x->first.expo == y->first.expo) || !(x->first.mono == y->first.mono) || x->second != y->second) {
      return false;
    }
  }
  return true;
}

std::string ExpElement::str() const {
  std::vector<Piece> pieces;
  for (const auto& [k, c] : terms_) {
    std::vector<std::string> factors = mono_factors(k.mono);
    if (!k.expo.is_zero()) factors.push_back("exp(" + k.expo.str() + ")");
    append_pieces(pieces, c, std::move(factors));
  }
  return join_pieces(pieces);
}

std::ostream& operator<<(std::ostream& os, const ExpElement& e) { return os << e.str(); }

}  // namespace donsum
