#include "halin/cli.hpp"

int main(int argc, char** argv) { return halin::run_cli(argc, argv); }
