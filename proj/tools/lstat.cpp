#include <iostream>
#include <string>
#include <vector>

#include "lstat/cli.hpp"

int main(int argc, char** argv) {
  return lstat::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
