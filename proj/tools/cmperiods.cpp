#include <iostream>

#include "cmperiods/cli.hpp"

int main(int argc, char** argv) {
  return cmperiods::run(argc, argv, std::cout, std::cerr);
}
