#include <iostream>
#include <vector>

#include "nsd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nsd::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
