#include <iostream>
#include <string>
#include <vector>

#include "wigcav/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wigcav::run_cli(std::move(args), std::cout, std::cerr);
}
