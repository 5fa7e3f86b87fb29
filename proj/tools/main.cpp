#include <iostream>

#include "legendre/cli.hpp"

int main(int argc, char** argv) {
  return legendre::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
