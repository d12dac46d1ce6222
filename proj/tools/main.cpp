#include "podpart/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return podpart::cli::main(argc, argv, std::cout, std::cerr);
}
