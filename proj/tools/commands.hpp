#pragma once

#include <ostream>

#include "donsum/errors.hpp"

namespace donsum::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitPrecondition = 4;

int exit_code_for(Errc code);

/// Runs the command line; never throws. Verbosity comes from DONSUM_VERBOSE
/// (0: machine block only, 1: default, 2: check details).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace donsum::cli
