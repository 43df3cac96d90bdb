#include <iostream>
#include <string>
#include <vector>

#include "relcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return relcat::cli::dispatch(args, std::cout, std::cerr);
}
