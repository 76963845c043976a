#include "qumode/cli_app.hpp"

int main(int argc, char** argv) { return qumode::run_cli(argc, argv); }
