#include <iostream>

#include "qbs/cli.h"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qbs::run_cli(args, std::cout, std::cerr);
}
