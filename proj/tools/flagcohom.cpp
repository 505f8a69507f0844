#include "flagcohom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return flagcohom::cli::run(argc, argv, std::cout, std::cerr); }
