#include <iostream>

#include "signlap/cli.hpp"

int main(int argc, char** argv) { return signlap::cli::run(argc, argv, std::cout, std::cerr); }
