#include <iostream>
#include <string>
#include <vector>

#include "mixspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mixspec::run_cli(args, std::cin, std::cout, std::cerr);
}
