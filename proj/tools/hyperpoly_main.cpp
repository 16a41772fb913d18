#include <iostream>
#include <vector>

#include "hyperpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hyperpoly::run_cli(args, std::cout, std::cerr);
}
