#include <iostream>

#include "dbgf/cli.hpp"

int main(int argc, char** argv) { return dbgf::cli::run(argc, argv, std::cout, std::cerr); }
