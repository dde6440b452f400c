#include <iostream>
#include <string>
#include <vector>

#include "fastdice/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return fastdice::cli::run(std::move(args), std::cout, std::cerr);
}
