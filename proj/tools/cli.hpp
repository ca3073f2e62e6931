#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gibbsmi::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNumerical = 3,
  kIo = 4,
  kViolation = 5,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gibbsmi::cli
