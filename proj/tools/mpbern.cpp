#include <iostream>

#include "mpbern/cli.hpp"

int main(int argc, char** argv) {
  return mpbern::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
