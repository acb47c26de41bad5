#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ihara::cli {

enum ExitCode : int {
    kSuccess = 0,
    kViolation = 1,   // engines disagree, invariant or formula violated
    kInputError = 2,  // unreadable file, malformed spec, bad arguments
    kSizeCap = 3,     // enumeration engine cap exceeded
};

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ihara::cli
