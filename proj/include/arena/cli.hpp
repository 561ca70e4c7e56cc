#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arena {

// Exit codes of the `arena` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: play, sweep, verify, solve, serve. Writes results to `out` and
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arena
