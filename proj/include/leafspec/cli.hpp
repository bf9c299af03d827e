#ifndef LEAFSPEC_CLI_HPP
#define LEAFSPEC_CLI_HPP

#include <string>
#include <vector>

namespace leafspec {

// Exit codes: 0 success, 2 malformed input or usage, 3 resource limits,
// 4 domain violations (no pole at z = 1, tail not certifiable, ...),
// 5 validation failures (not a Hilbert series, verification mismatch).
struct CommandResult {
  int exit_code = 0;
  std::string payload;      // JSON document (or help text) for stdout
  std::string diagnostics;  // human-readable notes for stderr
};

// The whole command line minus argv[0].  Never throws; failures land in the
// exit code and diagnostics so the binary and the tests share one path.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace leafspec

#endif
