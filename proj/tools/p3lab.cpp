#include <iostream>

#include "p3lab/cli.hpp"

int main(int argc, char** argv) {
  return p3lab::cli::run(argc, argv, std::cout, std::cerr);
}
