#include <iostream>

#include "graphlie/cli.hpp"

int main(int argc, char** argv) {
  return graphlie::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
