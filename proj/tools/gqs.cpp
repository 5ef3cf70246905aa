#include <iostream>
#include <string>
#include <vector>

#include "gqs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gqs::runCommand(args, std::cout, std::cerr);
}
