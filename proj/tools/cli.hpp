#ifndef HVLAB_TOOLS_CLI_HPP
#define HVLAB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hvlab::cli {

enum ExitCode { Ok = 0, Usage = 1, Domain = 2, Mismatch = 3 };

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hvlab::cli

#endif  // HVLAB_TOOLS_CLI_HPP
