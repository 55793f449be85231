#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antimagic::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kVerificationFailed = 3,
  kBudgetExhausted = 4,
};

// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antimagic::cli
