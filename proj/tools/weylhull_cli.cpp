#include <iostream>
#include <string>
#include <vector>

#include "weylhull/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weylhull::dispatch(args, std::cout, std::cerr);
}
