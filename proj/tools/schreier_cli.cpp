#include <iostream>

#include "schreier/cli.hpp"

int main(int argc, char **argv) { return schreier::cli::run(argc, argv, std::cout, std::cerr); }
