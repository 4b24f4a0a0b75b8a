#include <iostream>

#include "kramanujan_cli.hpp"

int main(int argc, char** argv) { return kramanujan::cli::run(argc, argv, std::cout, std::cerr); }
