#include "ztile/cli.hpp"

int main(int argc, char** argv) { return ztile::run_cli_main(argc, argv); }
