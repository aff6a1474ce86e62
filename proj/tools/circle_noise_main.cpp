#include <iostream>

#include "circle_noise/cli.hpp"

int main(int argc, char** argv) {
    return circle_noise::cli::run_cli(argc, argv, std::cout, std::cerr);
}
