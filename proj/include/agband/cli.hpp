#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agband::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`; "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace agband::cli
