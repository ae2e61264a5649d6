#include <iostream>

#include "heatgraph/cli.hpp"

int main(int argc, char** argv) {
  return heatgraph::cli_main(argc, argv, std::cout, std::cerr);
}
