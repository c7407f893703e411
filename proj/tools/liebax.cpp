#include <iostream>

#include "liebax/cli.hpp"

int main(int argc, char** argv) { return liebax::run(argc, argv, std::cout, std::cerr); }
