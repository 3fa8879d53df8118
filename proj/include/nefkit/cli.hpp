#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nefkit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kInvalidInput = 2,
    kDatasetError = 3,
    kScanViolation = 4,
};

// Entry point behind the nefkit executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nefkit::cli
