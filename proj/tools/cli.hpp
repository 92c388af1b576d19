#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nlhv::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerificationFailure = 2 };

/// Runs one invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double value);

}  // namespace nlhv::cli
