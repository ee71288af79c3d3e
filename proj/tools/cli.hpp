#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace anonlevel::cli {

enum ExitCode : int {
    kOk = 0,
    kRequirementNotMet = 1,
    kInputError = 2,
    kInternalError = 3,
};

struct Options {
    /// ANSI styling for text output written to `out`.
    bool color = false;
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options = {});

}  // namespace anonlevel::cli
