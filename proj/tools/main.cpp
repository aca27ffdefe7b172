#include <iostream>

#include "ssot/cli.hpp"

int main(int argc, char** argv) { return ssot::run_cli(argc, argv, std::cout, std::cerr); }
