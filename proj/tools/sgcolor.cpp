#include <iostream>

#include "sgcolor/cli.hpp"

int main(int argc, char** argv) {
  return sgcolor::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
