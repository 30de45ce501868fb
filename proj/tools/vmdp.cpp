#include "vmdp/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return vmdp::cli::run(argc, argv, std::cout, std::cerr); }
