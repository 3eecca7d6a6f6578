#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "pqc/matrix.hpp"

namespace pqc::cli {

/// Process exit codes. Scripts key off these instead of parsing output.
enum ExitCode : int {
  kPass = 0,
  kError = 1,
  kNegative = 2,
  kParitySecure = 3,
};

/// Runs one command line (without the program name). The report payload goes
/// to `out` (or to --out), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// "a", "a+bi", "a-bi" or "bi", no spaces. Throws pqc::Error(kParseError).
Complex parseComplexLiteral(std::string_view text);

}  // namespace pqc::cli
