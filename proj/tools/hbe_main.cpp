#include <iostream>

#include "hbe/cli.hpp"

int main(int argc, char **argv) { return hbe::cli::main(argc, argv, std::cout, std::cerr); }
