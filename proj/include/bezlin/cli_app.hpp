#ifndef BEZLIN_CLI_APP_HPP
#define BEZLIN_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bezlin {

/// Runs the command-line interface on `args` (without the program name).
/// Exit codes: 0 success, 1 mathematical rejection, 2 input error,
/// 3 internal assertion failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bezlin

#endif  // BEZLIN_CLI_APP_HPP
