#include "cli.hpp"

int main(int argc, char** argv) { return satbound::cli::run(argc, argv); }
