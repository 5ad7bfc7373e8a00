#include <iostream>
#include <string>
#include <vector>

#include "qdyson/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qdyson::cli::run(args, std::cout, std::cerr);
}
