#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace busemann::cli {

enum ExitCode : int {
  kAllPass = 0,
  kViolation = 1,  // an inequality failed or a sign prediction was not met
  kUsage = 2,      // bad flags, malformed body spec or file, inapplicable theorem
  kNumeric = 3,    // quadrature or root solve failed
};

/// Runs the command line in-process; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace busemann::cli
