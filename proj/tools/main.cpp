#include "hyperspec/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hyperspec::run_cli(args, std::cin, std::cout, std::cerr);
}
