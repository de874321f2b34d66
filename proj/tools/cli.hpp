#pragma once

#include <iosfwd>

namespace phasesteg::cli {

/// Stable process exit codes.
enum ExitStatus : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Runs the command line. Results go to `out` as key=value lines; diagnostics
/// go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace phasesteg::cli
