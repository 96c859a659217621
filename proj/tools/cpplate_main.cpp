#include <vector>
#include <string>

#include "cpplate/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return cpplate::cli::run(args);
}
