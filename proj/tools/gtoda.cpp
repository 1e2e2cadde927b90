#include "gtoda/cli/app.hpp"

int main(int argc, char** argv) { return gtoda::cli::run_command(argc, argv); }
