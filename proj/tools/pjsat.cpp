#include <iostream>

#include "pjsat/cli.hpp"

int main(int argc, char** argv) { return pjsat::cli::run_main(argc, argv, std::cout, std::cerr); }
