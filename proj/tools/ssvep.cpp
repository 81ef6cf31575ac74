#include "ssvep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ssvep::cli::run(argc, argv, std::cout, std::cerr); }
