#include "mdsgit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mdsgit::cli::run(argc, argv, std::cout, std::cerr); }
