#include <iostream>

#include "modasc/cli.hpp"

int main(int argc, char** argv) { return modasc::run_cli(argc, argv, std::cout, std::cerr); }
