#include "dtforge/cli.hpp"

int main(int argc, char** argv) { return dtforge::run_cli(argc, argv); }
