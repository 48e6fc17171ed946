#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace retract {

enum ExitCode : int {
  kExitOk = 0,
  kExitNotIdempotent = 1,
  kExitParseError = 2,
  kExitCertificateFailure = 3,
};

/// Command-line driver. args excludes the program name. Subcommands:
///   check <file>
///   analyze <file> [--json] [--out <path>]
///   gen --n N --d D --r R --seed S --complexity C [--count K] [--domain QQ] [--out-dir DIR]
///   selftest
/// plus a global --threads cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace retract
