#include <iostream>
#include <string>
#include <vector>

#include "hornsat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hornsat::run_cli(args, std::cin, std::cout, std::cerr);
}
