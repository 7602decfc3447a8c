#include <iostream>
#include <string>
#include <vector>

#include "ontoq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ontoq::cli::run(args, std::cout, std::cerr);
}
