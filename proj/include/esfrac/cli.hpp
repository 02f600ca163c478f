#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esfrac::cli {

enum ExitCode : int {
    kOk = 0,
    kClaimViolated = 1,
    kUsage = 2,
    kOverflow = 3,
};

// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esfrac::cli
