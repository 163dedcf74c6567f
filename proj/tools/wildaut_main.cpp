#include "wildaut/cli.hpp"

int main(int argc, char** argv) { return wildaut::cli_main(argc, argv); }
