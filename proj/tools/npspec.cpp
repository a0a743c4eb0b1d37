#include <iostream>

#include "npspec/cli.hpp"

int main(int argc, char** argv) { return npspec::run_cli(argc, argv, std::cout, std::cerr); }
