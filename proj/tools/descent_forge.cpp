#include <cstdio>
#include <string>
#include <vector>

#include "forge/cli_runner.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    std::fputs(forge::cli_usage().c_str(), stdout);
    return args.empty() ? 1 : 0;
  }
  auto result = forge::run_command(args);
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
