#include "polycsp/cli.hpp"

int main(int argc, char** argv) { return polycsp::cli_main(argc, argv); }
