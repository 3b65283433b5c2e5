#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeinlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,     // a relation or identity check failed
  kExitInput = 2,       // parse error or unusable input
  kExitGuard = 3,       // intermediate-rank guard or term budget exceeded
  kExitGroup = 4,       // group could not be built
};

// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeinlab
