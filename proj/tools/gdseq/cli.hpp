#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdseq::cli {

enum ExitCode : int {
    kOk = 0,
    kRuntimeFailure = 1,  ///< resource failure or I/O error
    kUsage = 2,
    kMismatch = 3,
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdseq::cli
