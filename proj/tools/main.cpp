#include <iostream>

#include "qadm/cli.hpp"

int main(int argc, char** argv) {
  return qadm::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
