#include <iostream>
#include <vector>

#include "rbfc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rbfc::run_cli(args, std::cout, std::cerr);
}
