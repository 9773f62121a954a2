#include <iostream>

#include "balancing/cli.hpp"

int main(int argc, char** argv) { return balancing::cli::run(argc, argv, std::cout, std::cerr); }
