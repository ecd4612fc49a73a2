#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibideal::cli {

/// Runs the fibideal command line. args excludes the program name.
/// Returns 0 on success, 1 on a verification failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibideal::cli
