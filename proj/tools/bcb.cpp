#include "bcb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bcb::cli_main(argc, argv, std::cout, std::cerr); }
