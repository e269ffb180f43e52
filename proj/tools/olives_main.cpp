#include <iostream>

#include "olives/cli.hpp"

int main(int argc, char** argv) {
    return olives::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
