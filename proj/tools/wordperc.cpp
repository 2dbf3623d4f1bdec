#include <iostream>

#include "wordperc/cli.hpp"

int main(int argc, char** argv) {
  return wordperc::cli::run(argc, argv, std::cout, std::cerr);
}
