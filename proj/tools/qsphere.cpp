#include <iostream>

#include "qsphere/cli.hpp"

int main(int argc, char** argv) { return qsphere::cli::main(argc, argv, std::cout, std::cerr); }
