#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace bernlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out` (or to --output), one-line diagnostics to `err`.
///
/// Exit codes: 0 success, 1 numerical failure (the report is still written,
/// with its flags), 2 usage or domain error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bernlab::cli
