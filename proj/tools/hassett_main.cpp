#include "hassett/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hassett::run_cli(argc, argv, std::cout, std::cerr); }
