#pragma once

#include <iosfwd>

namespace pursuit::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1, // a graph outside the requested class, or a failed computation
    kUsage = 2,
    kIo = 3,
    kViolations = 4,
};

// Entry point of the `pursuit` tool; streams are injectable for tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pursuit::cli
