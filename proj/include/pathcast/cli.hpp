#ifndef PATHCAST_CLI_HPP_
#define PATHCAST_CLI_HPP_

#include <string>
#include <vector>

namespace pathcast::cli {

// Runs one `pathcast <subcommand> ...` invocation. Exit codes: 0 success,
// 1 usage error, 2 input error, 3 planning error. Errors also emit one
// machine-readable JSON line on stderr.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace pathcast::cli

#endif  // PATHCAST_CLI_HPP_
