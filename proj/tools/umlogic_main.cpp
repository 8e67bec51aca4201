#include <iostream>
#include <string>
#include <vector>

#include "umlogic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return umlogic::cli::run(args, std::cout, std::cerr);
}
