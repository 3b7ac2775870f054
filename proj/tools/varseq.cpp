#include <iostream>

#include "varseq/cli.hpp"

int main(int argc, char** argv) {
  return varseq::run_cli(argc, argv, std::cout, std::cerr);
}
