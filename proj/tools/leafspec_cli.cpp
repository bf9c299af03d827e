#include <iostream>
#include <string>
#include <vector>

#include "leafspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  leafspec::CommandResult result = leafspec::run_command(args);
  if (!result.payload.empty()) {
    std::cout << result.payload;
    if (result.payload.back() != '\n') std::cout << '\n';
  }
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics << '\n';
  return result.exit_code;
}
