// Command-line front end; all logic lives in eigenseq/cli.hpp.
#include <iostream>
#include <string>
#include <vector>

#include "eigenseq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eigenseq::run_command(args, std::cout, std::cerr);
}
