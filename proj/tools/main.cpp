#include <iostream>

#include "jacobiq/cli.hpp"

int main(int argc, char** argv) { return jacobiq::cli::run(argc, argv, std::cout); }
