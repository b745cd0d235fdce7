#ifndef SO3FIVE_CLI_HPP
#define SO3FIVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace so3five::cli {

// Exit codes (stable contract):
//   0  every check passed, or a verdict was delivered
//   1  an identity check failed
//   2  usage or lookup error
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Dispatches one invocation. args excludes the program name. All output
// goes to the provided streams, which keeps runs byte-deterministic and
// testable in-process.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace so3five::cli

#endif
