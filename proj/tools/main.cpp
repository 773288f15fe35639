#include <iostream>
#include <string>
#include <vector>

#include "hwcls/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hwcls::cli::run(std::move(args), std::cout, std::cerr);
}
