#include <iostream>

#include "shgtool/cli.hpp"

int main(int argc, char** argv) {
  return shgtool::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
