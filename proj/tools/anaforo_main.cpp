#include <iostream>

#include "anaforo/cli.hpp"

int main(int argc, char** argv) {
  return anaforo::cli::main(argc, argv, std::cout, std::cerr);
}
