#include <iostream>

#include "bchkit/cli/dispatch.hpp"

int main(int argc, char **argv) { return bchkit::run_cli(argc, argv, std::cout, std::cerr); }
