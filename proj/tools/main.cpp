#include "liouville/cli/cli.hpp"

int main(int argc, char** argv) { return liouville::cli::main_entry(argc, argv); }
