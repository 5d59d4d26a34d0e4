#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussphi::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kDomainError = 3,
};

/// Runs one command line (without the program name). Everything goes to
/// `out` except usage and error messages, which go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gaussphi::cli
