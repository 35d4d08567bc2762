#include <iostream>
#include <string>
#include <vector>

#include "rotkit/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return rotkit::run(args, std::cout, std::cerr);
}
