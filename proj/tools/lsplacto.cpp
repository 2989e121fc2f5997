#include "lsplacto/cli.h"

#include <iostream>

int main(int argc, char **argv) {
  return lsplacto::run_cli(argc, argv, std::cout, std::cerr);
}
