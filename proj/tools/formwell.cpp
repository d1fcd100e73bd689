#include <iostream>
#include <string>
#include <vector>

#include "formwell/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return formwell::cli::run(args, std::cout, std::cerr);
}
