#include <iostream>

#include "waring/commands.hpp"

int main(int argc, char** argv) { return waring::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
