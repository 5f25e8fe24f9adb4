#include <iostream>

#include "tripow/cli.hpp"

int main(int argc, char** argv) { return tripow::cli::main(argc, argv, std::cout, std::cerr); }
