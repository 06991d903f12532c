#include "fiatkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fiatkit::cli::run(argc, argv, std::cout, std::cerr); }
