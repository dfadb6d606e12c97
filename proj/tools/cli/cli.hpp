#pragma once

#include <optional>
#include <string>
#include <vector>

namespace runpoly::cli {

// Stable exit-code contract for scripting.
enum ExitCode : int {
  kPass = 0,
  kViolation = 1,
  kUsage = 2,
  kGuard = 3,
};

struct Result {
  int exit_code = kPass;
  std::string out;
  std::string err;
};

// Runs one invocation. `args` excludes the program name. `default_format`
// stands in for the RUNPOLY_FORMAT environment variable.
Result run(const std::vector<std::string>& args,
           std::optional<std::string> default_format = std::nullopt);

}  // namespace runpoly::cli
