#include <iostream>

#include "conicmap/cli.hpp"

int main(int argc, char** argv) {
  return conicmap::cli::run(argc, argv, std::cout, std::cerr);
}
