#include <iostream>
#include <string>
#include <vector>

#include "ecga/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ecga::cli::run(args, std::cout, std::cerr);
}
