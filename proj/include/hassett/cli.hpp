#ifndef HASSETT_CLI_HPP
#define HASSETT_CLI_HPP

#include <iosfwd>

namespace hassett {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `hassett` tool. Documents go to `out` (or to the
/// --output file), diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hassett

#endif  // HASSETT_CLI_HPP
