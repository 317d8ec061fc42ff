#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grassmann::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command.  `args` excludes the program name.  Results go to
/// `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grassmann::cli
