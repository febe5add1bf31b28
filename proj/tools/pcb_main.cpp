#include "pcb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pcb::cli::run(argc, argv, std::cout, std::cerr); }
