#include <iostream>

#include "modgal/cli.hpp"

int main(int argc, char** argv) { return modgal::cli::run(argc, argv, std::cout, std::cerr); }
