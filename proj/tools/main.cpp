#include "psfig/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return psfig::cli::run(argc, argv, std::cout, std::cerr); }
