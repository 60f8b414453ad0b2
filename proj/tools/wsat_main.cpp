#include <iostream>
#include <string>
#include <vector>

#include "wsat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wsat::cli::run(args, std::cin, std::cout, std::cerr);
}
