#include <iostream>

#include "monores/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return monores::run_cli(args, std::cin, std::cout, std::cerr);
}
