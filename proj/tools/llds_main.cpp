#include <iostream>
#include <vector>

#include "llds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return llds::dispatch(args, std::cout, std::cerr);
}
