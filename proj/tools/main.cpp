#include <iostream>
#include <string>
#include <vector>

#include "stirling_kit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return stirling_kit::run_cli(args, std::cout, std::cerr);
}
