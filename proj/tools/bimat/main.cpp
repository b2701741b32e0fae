#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return bimat::run(argc, argv, std::cout, std::cerr);
}
