#include <iostream>

#include "pointspec/cli.hpp"

int main(int argc, char** argv) { return pointspec::cli::run(argc, argv, std::cout, std::cerr); }
