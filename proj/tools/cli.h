#ifndef THOMPSON_TOOLS_CLI_H
#define THOMPSON_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace thompson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;

/// Runs one command line (args[0] is the program name). Returns the exit
/// code: 0 on success, 1 on usage or input errors, 2 on resource limits.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thompson::cli

#endif  // THOMPSON_TOOLS_CLI_H
