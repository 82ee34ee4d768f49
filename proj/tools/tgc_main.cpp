#include <iostream>
#include <string>
#include <vector>

#include "tgc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tgc::run_cli(args, std::cout, std::cerr);
}
