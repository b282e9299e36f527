#ifndef FORGE_CLI_RUNNER_HPP
#define FORGE_CLI_RUNNER_HPP

#include <string>
#include <vector>

namespace forge {

// Exit codes: 0 success, 1 parse/usage errors, 2 computation errors,
// 3 exhausted budgets or bounds.
struct CommandResult {
  int exit_code = 0;
  std::string output; // one JSON document, newline-terminated
};

// The whole CLI as a library call, so tests can drive it in-process.
CommandResult run_command(const std::vector<std::string>& args);

std::string cli_usage();

} // namespace forge

#endif
