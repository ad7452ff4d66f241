#include "pursuit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pursuit::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
