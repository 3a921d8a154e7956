#include <iostream>

#include "mckn/cli.hpp"

int main(int argc, char** argv) { return mckn::cli::run(argc, argv, std::cout, std::cerr); }
