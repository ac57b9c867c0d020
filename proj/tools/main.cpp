#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    return dmodes::cli::run(argc, argv, std::cout, std::cerr);
}
