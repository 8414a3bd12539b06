#ifndef TRAINS_CLI_HPP
#define TRAINS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace trains::cli {

// Runs one CLI invocation. `args` excludes the program name.
//
// Exit codes: 0 success; 1 negative result (validate/check/feasible);
// 2 strategy unsupported for the network; 64 usage error; 65 malformed or
// invalid input; 66 unreadable input file.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace trains::cli

#endif
