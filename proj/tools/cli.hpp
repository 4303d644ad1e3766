#pragma once

#include <ostream>
#include <span>
#include <string>

namespace quadcolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error, failed validation or verification
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace quadcolor::cli
