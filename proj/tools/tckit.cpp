#include <iostream>

#include "tckit/io.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return tckit::run_command(args, std::cout, std::cerr);
}
