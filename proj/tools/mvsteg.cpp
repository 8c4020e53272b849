#include <iostream>
#include <string>
#include <vector>

#include "mvsteg/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return mvsteg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
