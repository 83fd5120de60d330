#include <iostream>

#include "akz/cli.hpp"

int main(int argc, char** argv) { return akz::run_command(argc, argv, std::cout, std::cerr); }
