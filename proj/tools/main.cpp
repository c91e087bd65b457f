#include <iostream>

#include "psiflat/cli.hpp"

int main(int argc, char** argv) { return psiflat::cli::run(argc, argv, std::cout, std::cerr); }
