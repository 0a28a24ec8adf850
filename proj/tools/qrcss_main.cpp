#include <iostream>

#include "qrcss/cli.hpp"

int main(int argc, char** argv) { return qrcss::run_cli(argc, argv, std::cout, std::cerr); }
