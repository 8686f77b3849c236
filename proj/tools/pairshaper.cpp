#include <iostream>

#include "pairshaper/cli/run.hpp"

int main(int argc, char** argv) { return pairshaper::cli::run_cli(argc, argv, std::cout, std::cerr); }
