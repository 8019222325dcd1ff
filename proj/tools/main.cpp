#include <iostream>

#include "sifca/cli.hpp"

int main(int argc, char** argv) { return sifca::run_cli(argc, argv, std::cout, std::cerr); }
