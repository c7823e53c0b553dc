#include "ppoly/cli.h"

#include <iostream>

int main(int argc, char** argv) {
  return ppoly::run_cli(argc, argv, std::cout, std::cerr);
}
