#include <iostream>

#include <georag/cli/app.hpp>

int main(int argc, char** argv) {
    return georag::cli::run_cli(argc, argv, std::cout, std::cerr);
}
