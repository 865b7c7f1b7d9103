#include <iostream>

#include "lerchlab/harness.hpp"

int main(int argc, char** argv) { return lerchlab::harness::run_cli(argc, argv, std::cout, std::cerr); }
