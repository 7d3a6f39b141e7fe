#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;  // certification verdict FAILED
inline constexpr int kExitParse = 2;        // malformed invocations and literals
inline constexpr int kExitDomain = 3;       // precondition violations
inline constexpr int kExitBound = 4;        // insufficient search bound

/// Runs the command line given by args (program name excluded). All regular
/// output goes to `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forge::cli
