#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return intpts::cli::run(args, std::cout, std::cerr);
}
