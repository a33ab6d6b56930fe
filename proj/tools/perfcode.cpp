#include <iostream>
#include <string>
#include <vector>

#include "perfcode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return perfcode::run_cli(args, std::cout, std::cerr);
}
