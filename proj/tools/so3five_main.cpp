#include <iostream>
#include <string>
#include <vector>

#include "so3five/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return so3five::cli::run(args, std::cout, std::cerr);
}
