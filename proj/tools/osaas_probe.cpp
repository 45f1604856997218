#include <iostream>

#include "osaas/cli/commands.hpp"

int main(int argc, char** argv) { return osaas::cli::run_cli(argc, argv, std::cout, std::cerr); }
