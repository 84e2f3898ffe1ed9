#include <iostream>

#include "vvmf/cli.hpp"

int main(int argc, char** argv) { return vvmf::cli::run(argc, argv, std::cout, std::cerr); }
