#include <iostream>
#include <string>
#include <vector>

#include "rainbow/lab/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rainbow::lab::run(args, std::cout, std::cerr);
}
