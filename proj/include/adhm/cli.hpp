#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adhm {

// Command-line driver. args holds the arguments in natural order, without
// the program name. Exit codes: 0 success, 1 failed check (non-solution
// datum, failed sweep, inconsistent audit), 2 usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace adhm
