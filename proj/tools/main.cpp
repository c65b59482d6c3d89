#include <iostream>

#include "twlat/cli.hpp"

int main(int argc, char** argv) { return twlat::run_cli(argc, argv, std::cout, std::cerr); }
