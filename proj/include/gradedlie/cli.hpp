#ifndef GRADEDLIE_CLI_HPP
#define GRADEDLIE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gradedlie {

/// Runs the command line (without the program name). Exit codes: 0 on
/// success, 1 when a verification fails, 2 on bad usage or input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradedlie

#endif  // GRADEDLIE_CLI_HPP
