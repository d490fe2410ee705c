#include <iostream>

#include "entsep/cli.hpp"

int main(int argc, char** argv) {
  return entsep::cli::run(argc, argv, std::cout, std::cerr);
}
