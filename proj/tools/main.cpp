#include <iostream>
#include <string>
#include <vector>

#include "cyclic_shape/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cyclic_shape::run_cli(args, std::cout, std::cerr);
}
