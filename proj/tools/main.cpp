#include <iostream>

#include "pwh/cli.hpp"

int main(int argc, char** argv) {
    return pwh::cli::main_entry(argc, argv, std::cout, std::cerr);
}
