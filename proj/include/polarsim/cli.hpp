#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polarsim {

// Runs one CLI invocation; args excludes the program name. Returns 0 on
// success, 2 on a usage error, 1 on any contract failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polarsim
