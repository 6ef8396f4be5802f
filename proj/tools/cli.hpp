#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arimat::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kParseError = 2;
inline constexpr int kTooLarge = 3;
inline constexpr int kPrecondition = 4;

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arimat::cli
