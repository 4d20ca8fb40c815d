#include "peq/cli.hpp"

int main(int argc, char** argv) { return peq::cli::main_entry(argc, argv); }
