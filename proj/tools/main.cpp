#include <iostream>

#include "hmds/cli.hpp"

int main(int argc, char** argv) { return hmds::cli::run(argc, argv, std::cout, std::cerr); }
