#include <iostream>

#include "nilorb/cli.hpp"

int main(int argc, char** argv) {
  return nilorb::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
