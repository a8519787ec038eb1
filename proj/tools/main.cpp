#include <iostream>
#include <string>
#include <vector>

#include "starseq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return starseq::run_cli(args, std::cout, std::cerr);
}
