#include "rhombic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return rhombic::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
