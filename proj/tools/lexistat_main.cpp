#include <iostream>

#include "lexistat/cli.hpp"

int main(int argc, char** argv) {
    return lexistat::run_cli(argc, argv, std::cout, std::cerr);
}
