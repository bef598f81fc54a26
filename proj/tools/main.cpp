#include <iostream>

#include "twcst/cli.hpp"

int main(int argc, char** argv) {
    return twcst::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
