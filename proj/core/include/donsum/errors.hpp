#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace donsum {

enum class Errc {
  Parse,
  Validation,
  InvalidArgument,
  DivisionByZero,
  QuadraticInVar,
  Singular,
  NonIntegralSign,
  BadTopology,
  GenusMismatch,
  GenusUnsupported,
  NotNormalized,
  NotSimpleType,
  SingularCap,
  SectorMismatch,
  OutOfDomain,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `code()` distinguishes the named
/// error conditions; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace donsum
