#pragma once

#include <iosfwd>

namespace hellmann::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDomain = 3,
    kVerification = 4,
    kNumeric = 5,
    kSingular = 6,
};

/// Runs the command line in-process; everything goes to out and err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hellmann::cli
