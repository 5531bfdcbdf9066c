#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "morphcoh/error.hpp"

namespace morphcoh::cli {

/// Exit codes of the `morphcoh` tool.
enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,  // a check reported a violation, or a Shape/Validation error
  kUsage = 2,
  kParse = 3,
  kUnknownObject = 4,
  kPrecondition = 5,  // NotACocycle, NotASection and the other mathematical preconditions
  kSizeCeiling = 6,
  kInternal = 7,
};

int exit_code(ErrorKind kind) noexcept;

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morphcoh::cli
