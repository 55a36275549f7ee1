#include "stumpbounds/cli.hpp"

int main(int argc, char** argv) { return stumpbounds::run_cli(argc, argv); }
