#include "orbitmm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return orbitmm::run_cli(argc, argv, std::cout, std::cerr); }
