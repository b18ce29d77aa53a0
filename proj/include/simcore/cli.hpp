#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simcore::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 success, 1 verification failure or limit exceeded, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simcore::cli
