#include "singclass/cli.hpp"

int main(int argc, char** argv) {
    return singclass::cli::run(argc, argv, std::cout, std::cerr);
}
