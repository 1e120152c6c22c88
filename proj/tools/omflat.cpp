#include <iostream>

#include "omflat/cli.hpp"

int main(int argc, char** argv) { return omflat::run_cli(argc, argv, std::cout, std::cerr); }
