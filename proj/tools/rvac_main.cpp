#include "rvac/cli.hpp"

int main(int argc, char** argv) { return rvac::run_cli(argc, argv); }
