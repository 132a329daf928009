#include "polygeo/cli.hpp"

int main(int argc, char** argv) { return polygeo::cli::run(argc, argv); }
