#include "ggp/cli.hpp"

int main(int argc, char** argv) { return ggp::cli::run(argc, argv); }
