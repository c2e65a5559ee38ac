#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapwave::cli {

/// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name). Subcommands: phase,
/// sweep, sparams, calibrate, design, compare. Diagnostics go to `err` as one
/// line; results go to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapwave::cli
