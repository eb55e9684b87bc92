#include <iostream>

#include "matlen/cli.hpp"

int main(int argc, char** argv) {
    return matlen::cli::run(argc, argv, std::cout, std::cerr);
}
