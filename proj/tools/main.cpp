#include <iostream>

#include "kgqa/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kgqa::cli::run(args, std::cout, std::cerr);
}
