#include <iostream>
#include <string>
#include <vector>

#include "oplax/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return oplax::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "oplax: internal error: " << e.what() << '\n';
        return 3;
    }
}
