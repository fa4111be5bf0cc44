#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace gyro::cli {

inline constexpr std::string_view kToolName = "gyro";
inline constexpr std::string_view kVersion = "1.0.0";

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // axiom failure or domain error
inline constexpr int kExitParse = 2;    // unreadable or malformed .gyro input
inline constexpr int kExitUsage = 64;

/// Runs one invocation (args exclude the program name). The JSON report goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gyro::cli
