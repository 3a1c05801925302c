#include <iostream>

#include "krull/cli.hpp"

int main(int argc, char** argv) {
  return krull::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
