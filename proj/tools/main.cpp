#include "swanson/cli.hpp"

int main(int argc, char** argv) { return swanson::cli::cli_main(argc, argv); }
