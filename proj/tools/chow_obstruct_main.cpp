#include <iostream>
#include <string>
#include <vector>

#include "chow_obstruct/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chowob::cli::run(args, std::cout, std::cerr);
}
