#include "holoprep/cli/commands.hpp"

int main(int argc, char **argv) { return holoprep::cli::run(argc, argv); }
