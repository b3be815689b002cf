#include <iostream>
#include <string>
#include <vector>

#include "fp2gen/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fp2gen::cli::run(args, std::cout, std::cerr);
}
