#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    anonlevel::cli::Options options;
    options.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return anonlevel::cli::run(args, std::cout, std::cerr, options);
}
