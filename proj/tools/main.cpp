#include <iostream>
#include <string>
#include <vector>

#include "radsupp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const radsupp::CommandResult result = radsupp::run_cli(args);
  std::cout << result.output();
  std::cerr << result.diagnostics;
  return result.exit_code();
}
