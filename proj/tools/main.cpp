#include <iostream>

#include "cobk/cli.hpp"

int main(int argc, char** argv) { return cobk::run_cli(argc, argv, std::cout, std::cerr); }
