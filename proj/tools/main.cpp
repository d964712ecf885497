#include <iostream>

#include "onepi/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return onepi::cli::run(args, std::cout, std::cerr);
}
