#include <iostream>

#include "klspecht/cli.hpp"

int main(int argc, char** argv) {
  return klspecht::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
