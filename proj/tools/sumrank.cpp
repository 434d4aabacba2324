#include "sumrank/cli.hpp"

int main(int argc, char** argv) { return sumrank::cli::run(argc, argv); }
