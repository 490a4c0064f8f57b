#include <cctype>

#include "donsum/errors.hpp"
#include "donsum/exppoly.hpp"

namespace donsum {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExpElement parse() {
    ExpElement value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExpElement expr() {
    ExpElement value;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  ExpElement term() {
    ExpElement value = power();
    for (;;) {
      if (accept('*')) {
        value = value * power();
      } else if (accept('/')) {
        ExpElement divisor = power();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division by a non-constant or zero");
        value = value.scaled(divisor.constant_value().inverse());
      } else {
        return value;
      }
    }
  }

  ExpElement power() {
    ExpElement base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (n > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  Polynomial polynomial_argument(const ExpElement& arg) {
    Polynomial p;
    for (const auto& t : arg.terms()) {
      if (!t.expo.is_zero()) fail("nested exponential in exponent");
      p += Polynomial::monomial(t.coeff, t.mono);
    }
    if (p.degree() > 2) fail("exponent of degree above 2");
    if (!p.constant_term().is_zero()) fail("exponent with a constant term");
    return p;
  }

  ExpElement atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return ExpElement(GaussRat(Rational(value)));
    }
    if (c == '(') {
      ++pos_;
      ExpElement inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return ExpElement(GaussRat::i());
      if (name == "exp" || name == "sinh" || name == "cosh") {
        expect('(');
        const Polynomial arg = polynomial_argument(expr());
        expect(')');
        const ExpElement up = ExpElement::exp(arg);
        if (name == "exp") return up;
        const ExpElement down = ExpElement::exp(-arg);
        const GaussRat half = GaussRat::fraction(1, 2);
        return name == "sinh" ? (up - down).scaled(half) : (up + down).scaled(half);
      }
      return ExpElement::variable(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpElement parse_exp(std::string_view text) { return Parser(text).parse(); }

GaussRat parse_gaussrat(std::string_view text) {
  const ExpElement e = parse_exp(text);
  if (!e.is_constant()) throw Error(Errc::Parse, "not a constant: \"" + std::string(text) + "\"");
  return e.constant_value();
}

}  // namespace donsum
