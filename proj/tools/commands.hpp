#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lerch/types.hpp"

namespace lerch::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitDisagreement = 3,
};

/// Parses "re,im" (or a bare real) into a complex number.
std::optional<Complex> parse_complex(const std::string& text);

/// Tolerance used when --tol is absent: LERCH_TOL if set, else 1e-10.
/// Throws std::invalid_argument on a malformed LERCH_TOL.
double default_tolerance();

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(const std::string& text);

/// Runs one command line (without the program name). Everything the
/// command prints goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lerch::cli
