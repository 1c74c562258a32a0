#include <iostream>

#include "cli.h"

int main(int argc, char** argv) { return qec::cli::run(argc, argv, std::cout, std::cerr); }
