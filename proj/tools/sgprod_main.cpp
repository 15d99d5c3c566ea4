#include <iostream>
#include <string>
#include <vector>

#include "sgprod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgprod::run_cli(args, std::cin, std::cout, std::cerr);
}
