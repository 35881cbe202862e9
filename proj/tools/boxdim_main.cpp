#include <iostream>
#include <string>
#include <vector>

#include "boxdim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return boxdim::run_cli(args, std::cout, std::cerr);
}
