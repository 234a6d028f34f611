#pragma once

#include <iosfwd>

namespace veronese::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Entry point of the veronese tool: generate | check | reduce | decide.
/// The verdict line goes to out, reports and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace veronese::cli
