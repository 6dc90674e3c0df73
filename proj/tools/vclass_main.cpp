#include <iostream>

#include "vclass/cli.hpp"

int main(int argc, char** argv) {
  return vclass::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
