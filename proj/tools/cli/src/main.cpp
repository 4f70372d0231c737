#include <iostream>
#include <string>
#include <vector>

#include "dedekind_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dedekind::cli::run(args, std::cout, std::cerr);
}
