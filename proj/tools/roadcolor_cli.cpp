#include <iostream>

#include "roadcolor/cli.hpp"

int main(int argc, char** argv) { return roadcolor::cli_main(argc, argv, std::cout, std::cerr); }
