#include <iostream>
#include <string>
#include <vector>

#include "qsnn/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsnn::run_cli(args, std::cout, std::cerr);
}
