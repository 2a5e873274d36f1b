#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = dk::cli::run(args);
  std::cout << result.output;
  return result.exit_code;
}
