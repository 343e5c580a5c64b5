#include <string>
#include <vector>

#include "ortholab/cli.hpp"

int main(int argc, char** argv) {
    return ortholab::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
