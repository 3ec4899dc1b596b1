#include <iostream>

#include "airpockets/cli.hpp"

int main(int argc, char** argv)
{
    return airpockets::run_cli(argc, argv, std::cout, std::cerr);
}
