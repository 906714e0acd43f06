#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rhcmp::run(argc, argv, std::cout, std::cerr); }
