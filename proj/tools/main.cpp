#include "kernelalg/cli.hpp"

int main(int argc, char** argv) { return kernelalg::cli_main(argc, argv); }
