#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperoct {

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics and progress to `err`. Returns 0 on success, 1 when a
/// verification or input check fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hyperoct
