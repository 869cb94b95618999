#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ilab {

// Runs one CLI invocation (arguments exclude the program name). Returns the exit code:
// 0 all assertions passed, 1 some assertion failed, 2 usage, parse or build error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Scenario directory used by `repro` when no override is given.
std::string default_scenario_dir();

}  // namespace ilab
