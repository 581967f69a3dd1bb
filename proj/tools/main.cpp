#include <iostream>
#include <vector>

#include "xyk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xyk::cli::run(args, std::cout, std::cerr);
}
