#include <iostream>
#include <vector>

#include "finsemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return finsemi::run_cli(args, std::cout, std::cerr);
}
