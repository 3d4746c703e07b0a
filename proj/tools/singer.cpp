#include <iostream>

#include "singer/cli.hpp"

int main(int argc, char** argv) {
  return singer::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
