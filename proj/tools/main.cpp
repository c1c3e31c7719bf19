#include <iostream>

#include "nsmod_cli.hpp"

int main(int argc, char** argv) { return nsmod::cli::run(argc, argv, std::cout, std::cerr); }
