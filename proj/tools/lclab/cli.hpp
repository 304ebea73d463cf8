#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lclab::cli {

/// Exit codes of the lclab tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lclab::cli
