#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) { return titeica::cli::run_cli(argc, argv, std::cout, std::cerr); }
