#include <iostream>
#include <vector>

#include "trig/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return trig::cli::run(args, std::cout, std::cerr);
}
