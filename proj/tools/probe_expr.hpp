#pragma once

#include <functional>
#include <string>
#include <vector>

#include "donsum/gaussrat.hpp"

namespace donsum::cli {

/// One summand coeff * var * cls of a probe such as "s*sigma + 2*t*dbar".
struct ProbeSpec {
  GaussRat coeff;
  std::string var;
  std::string cls;
};

/// Parses a linear combination of named classes with formal variables.
/// `is_class` tells class names from variable names. Dotted names such as
/// "m1.E1" are accepted. Throws Error(Parse).
std::vector<ProbeSpec> parse_probe(const std::string& text, const std::function<bool(const std::string&)>& is_class);

}  // namespace donsum::cli
