#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace so7 {

// Argument-vector entry point behind main(); args excludes the program
// name.  Returns the process exit code: 0 success, 1 internal counting
// inconsistency, 2 usage error / unknown id / cache trouble.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace so7
