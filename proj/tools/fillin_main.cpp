#include <iostream>
#include <string>
#include <vector>

#include "fillin/io.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return fillin::run(args, std::cout, std::cerr);
}
