#include <iostream>
#include <string>
#include <vector>

#include "octa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return octa::cli::run(std::move(args), std::cout, std::cerr);
}
