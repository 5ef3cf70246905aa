#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gqs {

/// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqs
