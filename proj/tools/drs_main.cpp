#include "drs_cli.hpp"

int main(int argc, char** argv) { return drs::cli::run(argc, argv); }
