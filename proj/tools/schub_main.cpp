#include "schub/cli.hpp"

int main(int argc, char** argv) { return schub::run_cli(argc, argv); }
