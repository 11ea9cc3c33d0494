#include "ribbonlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const ribbonlab::CliOutcome out = ribbonlab::run_cli(args);
  std::cout << out.text;
  return out.exit_code;
}
