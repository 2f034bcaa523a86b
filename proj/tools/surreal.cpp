#include "surreal/cli.hpp"

#include <iostream>

#include <unistd.h>

int main(int argc, char** argv) {
  return surreal::cli::run(argc, argv, std::cin, std::cout, std::cerr,
                           isatty(STDIN_FILENO) != 0);
}
