#include <iostream>
#include <string>
#include <vector>

#include "nrlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nrlab::cli::run(args, std::cout, std::cerr);
}
