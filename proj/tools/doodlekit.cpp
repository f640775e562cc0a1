#include <iostream>

#include "doodlekit/cli.hpp"

int main(int argc, char** argv) {
  return doodlekit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
