#include "bagdet/cli.hpp"

int main(int argc, char** argv) {
    return bagdet::cli::run(argc, argv);
}
