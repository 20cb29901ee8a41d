#include <iostream>

#include "arrowgraph/cli.hpp"

int main(int argc, char** argv) { return arrowgraph::run_cli(argc, argv, std::cout, std::cerr); }
