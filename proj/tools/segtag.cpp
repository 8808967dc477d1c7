#include "segtag/cli.hpp"

int main(int argc, char** argv) { return segtag::run_cli(argc, argv); }
