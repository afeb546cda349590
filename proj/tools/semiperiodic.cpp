#include <iostream>
#include <string>
#include <vector>

#include "semiperiodic/report/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semiperiodic::report::run(args, std::cout, std::cerr);
}
