#include <iostream>

#include "mla/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mla::run_cli(args, std::cout, std::cerr);
}
