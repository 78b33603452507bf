#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sproots::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kGuardExceeded = 2,
  kVerificationMismatch = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sproots::cli
