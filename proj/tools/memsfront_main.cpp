#include <vector>

#include "memsfront/cli.hpp"

int main(int argc, char** argv) {
    return memsfront::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
