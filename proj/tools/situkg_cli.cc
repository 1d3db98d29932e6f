#include <iostream>
#include <string>
#include <vector>

#include "situkg/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return situkg::run_cli(args, std::cout, std::cerr);
}
