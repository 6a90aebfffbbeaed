#include <iostream>
#include <string>
#include <vector>

#include "ngsmell/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ngsmell::run_cli(args, std::cout, std::cerr);
}
