#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace miquel::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailure = 1,
  kInvalidInput = 2,
  kDegeneracy = 3,
  kBudget = 4,
};

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace miquel::cli
