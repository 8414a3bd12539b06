#include <iostream>
#include <vector>

#include "trains_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trains::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
