#include <iostream>

#include "urh/cli.hpp"

int main(int argc, char** argv)
{
    return urh::cli::run(argc, argv, std::cout, std::cerr);
}
