#include "demat/cli.hpp"

int main(int argc, char** argv) {
    return demat::cli::run(argc, argv);
}
