#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixbraid::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success/true/pass, 1 false/fail/not-found, 2 usage or input
/// error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mixbraid::cli
