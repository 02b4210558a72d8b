#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgen::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kUsage = 2,
  kPrecision = 3,
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output names a file; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgen::cli
