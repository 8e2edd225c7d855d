#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logion::cli {

enum Exit : int {
  kOk = 0,
  kNoResult = 1,  // search found nothing / check says "not a BC"
  kInputError = 2,
  kUsageError = 3,
};

/// Runs one command line (args exclude the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logion::cli
