#ifndef RECIP_CLI_HPP_
#define RECIP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace recip::cli {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_tolerance = 3;

/// Runs one command. args excludes the program name. Returns the exit code:
/// 0 on success, 2 for invalid input, 3 when a verify residual exceeds the
/// tolerance.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recip::cli

#endif  // RECIP_CLI_HPP_
