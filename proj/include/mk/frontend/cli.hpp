#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mk::frontend {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `kd` command line. `args` excludes the program name.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mk::frontend
