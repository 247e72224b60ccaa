#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kaprekar::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Range {
  long long first;
  long long last;
};

/// "7" or "2..16".
Range parse_range(const std::string& text);

}  // namespace kaprekar::cli
