#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbool::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line given without the program name.  Output goes to
/// out, diagnostics and usage text to err.  Returns 0 on success, 1 when a
/// verification finds a mismatch and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symbool::cli
