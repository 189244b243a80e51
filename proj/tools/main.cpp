#include "pathcast/cli.hpp"

int main(int argc, char** argv) { return pathcast::cli::run(argc, argv); }
