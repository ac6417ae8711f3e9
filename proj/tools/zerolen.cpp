#include "cli.hpp"

int main(int argc, char** argv) { return zerolen::cli::run(argc, argv); }
