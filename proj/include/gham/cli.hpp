#ifndef GHAM_CLI_HPP
#define GHAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gham {

// Command line front end, separated from main() so tests can drive it.
// args excludes the program name. Exit codes: 0 success, 1 usage error,
// 2 unreadable or malformed input, 3 infeasible request.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gham

#endif
