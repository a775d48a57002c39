#include <iostream>

#include "gradedlie/cli.hpp"

int main(int argc, char** argv) {
  return gradedlie::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
