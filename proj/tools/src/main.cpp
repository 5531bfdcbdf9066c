#include <iostream>

#include "morphcoh/cli.hpp"

int main(int argc, char** argv) {
  return morphcoh::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
