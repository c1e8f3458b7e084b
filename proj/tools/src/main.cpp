#include <iostream>

#include "dforge_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dforge::cli::dispatch(args, std::cout, std::cerr);
}
