#include "nodkit/cli.hpp"

int main(int argc, char** argv) { return nodkit::cli::run(argc, argv); }
