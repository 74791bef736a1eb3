#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsym::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,   // parse or validation failure
  kDomainError = 3,  // request outside the hypotheses of a formula
};

// Runs one `hsym` invocation. args excludes the program name. Results go to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsym::cli
