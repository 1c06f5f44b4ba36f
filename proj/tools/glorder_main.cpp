#include <iostream>
#include <string>
#include <vector>

#include "glorder/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return glorder::run_cli(args, std::cout, std::cerr);
}
