#include <iostream>
#include <string>
#include <vector>

#include "reachbase/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = reachbase::cli::run(args, std::cin);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
