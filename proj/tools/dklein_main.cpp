#include <iostream>

#include "dklein/cli.hpp"

int main(int argc, char** argv) {
  return dklein::cli_run(argc, argv, std::cout, std::cerr);
}
