#include "lvdist/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return lvdist::run_cli(args, std::cout, std::cerr);
}
