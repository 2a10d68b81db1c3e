#include <iostream>
#include <string>
#include <vector>

#include "mk/frontend/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mk::frontend::runCli(args, std::cout, std::cerr);
}
