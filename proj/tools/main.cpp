#include <iostream>
#include <string>
#include <vector>

#include "fracgreen/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fracgreen::run_cli(args, std::cout, std::cerr);
}
