#pragma once

#include <ostream>

namespace vmdp::cli {

enum ExitCode : int {
    kExitOk = 0,
    /// Validation violations, or a `compare` mismatch.
    kExitCheckFailed = 1,
    kExitUsageError = 2,
    kExitCapExceeded = 3,
};

/**
 * Entry point of the `vmdp` tool: parses arguments, runs one subcommand and
 * returns the process exit code. Human-readable output goes to `out`,
 * diagnostics to `err`.
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace vmdp::cli
