#include <iostream>

#include "kodsum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kodsum::cli::run(args, std::cout, std::cerr);
}
