#ifndef CRN_CLI_HPP
#define CRN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace crn {

/// Runs the crnctl command line (args without the program name).
/// Exit codes: 0 = controllable / success, 1 = not shown or not
/// controllable / nothing found, 2 = usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crn

#endif
