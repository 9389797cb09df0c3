#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphlie {

/// Runs one command line (arguments after the program name). Results go to
/// `out` or to --out files, diagnostics to `err`. Returns 0 on success, 1 on
/// bad input, 2 when a mathematical invariant fails.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphlie
