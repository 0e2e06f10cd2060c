#include <iostream>

#include "ddmol/app.hpp"

int main(int argc, char** argv) { return ddmol::cli_main(argc, argv, std::cout, std::cerr); }
