#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace langgames {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoResult = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitInvariant = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace langgames
