#include "probe_expr.hpp"

#include <cctype>

#include "donsum/errors.hpp"
#include "donsum/exppoly.hpp"

namespace donsum::cli {

namespace {

// The expression grammar has no dots in identifiers; map them to a
// sequence that cannot appear in user input and back.
const std::string kDot = "__dot__";

std::string encode(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool inner = i > 0 && i + 1 < text.size() && std::isalnum(static_cast<unsigned char>(text[i - 1])) &&
                       std::isalpha(static_cast<unsigned char>(text[i + 1]));
    if (text[i] == '.' && inner) {
      out += kDot;
    } else {
      out += text[i];
    }
  }
  return out;
}

std::string decode(std::string name) {
  for (std::size_t pos = name.find(kDot); pos != std::string::npos; pos = name.find(kDot, pos + 1)) {
    name.replace(pos, kDot.size(), ".");
  }
  return name;
}

}  // namespace

std::vector<ProbeSpec> parse_probe(const std::string& text, const std::function<bool(const std::string&)>& is_class) {
  if (text.find(kDot) != std::string::npos) throw Error(Errc::Parse, "reserved sequence in probe");
  const ExpElement e = parse_exp(encode(text));
  if (e.is_zero()) throw Error(Errc::Parse, "empty probe \"" + text + "\"");
  std::vector<ProbeSpec> out;
  for (const auto& t : e.terms()) {
    if (!t.expo.is_zero()) throw Error(Errc::Parse, "exponentials are not allowed in a probe");
    std::string cls;
    std::string var;
    for (const auto& [raw, power] : t.mono.powers()) {
      const std::string name = decode(raw);
      std::string& slot = is_class(name) ? cls : var;
      if (power != 1 || !slot.empty()) {
        throw Error(Errc::Parse, "each probe term needs one variable times one class, got " + decode(t.mono.str()));
      }
      slot = name;
    }
    if (cls.empty() || var.empty()) {
      throw Error(Errc::Parse, "each probe term needs one variable times one class, got " + decode(t.mono.str()));
    }
    out.push_back({t.coeff, var, cls});
  }
  return out;
}

}  // namespace donsum::cli
