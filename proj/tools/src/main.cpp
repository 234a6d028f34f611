#include <iostream>

#include "veronese_cli/commands.hpp"

int main(int argc, char** argv) { return veronese::cli::run(argc, argv, std::cout, std::cerr); }
