#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcentropy::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,       // bad arguments or unparseable input
  kValidation = 2,  // integrability refusal
  kSelfCheck = 3,   // numerical self-check or identity failure
};

/// Runs `wcentropy <estimate|curves|convergence|identities> ...` with the
/// given arguments (args[0] is the program name). Results go to `out` unless
/// --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcentropy::cli
