#pragma once

#include <ostream>

namespace molsym::cli {

enum ExitCode { kSuccess = 0, kComputationError = 1, kUsageError = 2 };

/// Parses argv, runs one subcommand and writes the artifact to `out` (or --output).
/// Diagnostics go to `err` as a single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace molsym::cli
