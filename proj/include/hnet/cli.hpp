#ifndef HNET_CLI_HPP
#define HNET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hnet::cli {

enum ExitStatus : int {
    kOk = 0,
    kViolations = 1,
    kParseError = 2,
    kUsageError = 3,
    kOperatorError = 4,
};

// Runs one invocation. `args` excludes the program name. File operands named
// "-" read `in`; an output path of "-" (the default) writes to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace hnet::cli

#endif // HNET_CLI_HPP
