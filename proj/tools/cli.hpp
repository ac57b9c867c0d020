#pragma once

#include <ostream>

namespace dmodes::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNumericalFailure = 3;

// Runs the tool with the given argument vector; all output goes to the streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dmodes::cli
