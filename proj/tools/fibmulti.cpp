#include <iostream>

#include "fibmulti/cli.hpp"

int main(int argc, char** argv) { return fibmulti::cli::run_cli(argc, argv, std::cout, std::cerr); }
