#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "socplan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  socplan::CliOptions options;
  options.color = std::getenv("SOCPLAN_NO_COLOR") == nullptr && isatty(STDERR_FILENO) != 0;
  return socplan::run_cli(args, std::cout, std::cerr, options);
}
