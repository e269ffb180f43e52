#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace olives {

// Exit statuses of the `olives` command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace olives
