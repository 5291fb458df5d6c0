#include <iostream>

#include "pqb_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pqb::cli::main_entry(args, std::cout, std::cerr);
}
