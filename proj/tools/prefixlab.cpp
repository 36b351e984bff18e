#include <iostream>

#include "prefixlab/cli.hpp"

int main(int argc, char** argv) { return prefixlab::cli::run(argc, argv, std::cout, std::cerr); }
