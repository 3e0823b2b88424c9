#include <iostream>
#include <string>
#include <vector>

#include "faulhaber/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return faulhaber::run_cli(args, std::cout, std::cerr);
}
