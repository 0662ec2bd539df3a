#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpbern {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; `args` excludes the program name. Output goes to
/// `out` unless --out names a file. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpbern
