#include <iostream>
#include <string>
#include <vector>

#include "leibext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return leibext::cli::run(args, std::cin, std::cout, std::cerr);
}
