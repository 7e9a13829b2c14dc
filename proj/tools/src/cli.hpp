#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gadic::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotebookFail = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Runs `gadic <args...>` (args exclude the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gadic::app
