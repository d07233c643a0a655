#include <iostream>

#include "skein/cli.hpp"

int main(int argc, char** argv) { return skein::run_cli(argc, argv, std::cout, std::cerr); }
