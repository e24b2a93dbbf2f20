#include "xist/cli.hpp"

int main(int argc, char **argv) { return xist::cli::run(argc, argv); }
