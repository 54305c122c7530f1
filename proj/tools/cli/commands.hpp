#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlcseg::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,
    kExitParse = 3,
    kExitRefusal = 4,
    kExitIo = 5,
};

// Runs one command line (args[0] is the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlcseg::cli
