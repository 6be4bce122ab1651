#include <iostream>
#include <string>
#include <vector>

#include "agband/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return agband::cli::run(args, std::cout, std::cerr, std::cin);
}
