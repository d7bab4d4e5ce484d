#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jordan::cli {

/// Exit codes: 0 pass, 1 verification failure, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordan::cli
