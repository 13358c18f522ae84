#include <iostream>
#include <string>
#include <vector>

#include "okp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return okp::cli::run(args, std::cout, std::cerr);
}
