#include <iostream>

#include "takiff/cli.hpp"

int main(int argc, char** argv) { return takiff_lab::run(argc, argv, std::cout, std::cerr); }
