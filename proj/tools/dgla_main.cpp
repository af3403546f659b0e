#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "dgla/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
  return dgla::run_command(args, std::cout, std::cerr, color);
}
