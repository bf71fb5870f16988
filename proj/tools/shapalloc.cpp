#include <iostream>

#include "shapalloc/cli.hpp"

int main(int argc, char** argv) {
  return shapalloc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
