#include <iostream>

#include "hyperoct/cli.hpp"

int main(int argc, char** argv) {
  return hyperoct::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
