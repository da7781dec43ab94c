#include <iostream>
#include <string>
#include <vector>

#include "lfol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lfol::run_cli(args, std::cout, std::cerr);
}
