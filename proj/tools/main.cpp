#include "carriergame/cli.hpp"

int main(int argc, char** argv) { return carriergame::cli_main(argc, argv); }
