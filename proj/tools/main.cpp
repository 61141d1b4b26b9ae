#include "liemat/cli.hpp"

int main(int argc, char** argv) { return liemat::run_cli(argc, argv); }
