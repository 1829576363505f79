#include <iostream>

#include "topmatch/cli/dispatch.hpp"

int main(int argc, char** argv) { return topmatch::cli::cli_dispatch(argc, argv, std::cin, std::cout, std::cerr); }
