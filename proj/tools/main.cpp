#include <iostream>
#include <vector>

#include "hyperpi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hyperpi::cli_dispatch(std::move(args), std::cout, std::cerr);
}
