#include <iostream>
#include <string>
#include <vector>

#include "fibsum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fibsum::cli::run(args, std::cout, std::cerr);
}
