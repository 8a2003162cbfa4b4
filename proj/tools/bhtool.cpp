#include <iostream>

#include "bh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = bh::cli::execute(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
