#include <iostream>

#include "lietwist_cli/app.hpp"

int main(int argc, char** argv) { return lietwist::cli::run(argc, argv, std::cout, std::cerr); }
