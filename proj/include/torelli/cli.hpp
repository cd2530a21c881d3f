#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torelli::cli {

// Dispatches one invocation. args excludes the program name. Returns the
// process exit code: 0 on success, 1 on domain errors (bad input words,
// odd words fed to eps, non-kernel words fed to factor, ...), 2 on usage
// errors. Normal output goes to out, error text to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace torelli::cli
