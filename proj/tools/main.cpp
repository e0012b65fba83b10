#include <iostream>

#include "gcat/cli.hpp"

int main(int argc, char** argv) {
  return gcat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
