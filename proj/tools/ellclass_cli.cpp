#include <iostream>

#include "ellclass/cli.hpp"

int main(int argc, char** argv) { return ellclass::run_cli(argc, argv, std::cout); }
