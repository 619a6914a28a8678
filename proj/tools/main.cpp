#include <iostream>

#include "stpursuit/cli.hpp"

int main(int argc, char** argv) {
  return stpursuit::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
