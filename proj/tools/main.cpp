#include "nsg/cli.hpp"

int main(int argc, char** argv) { return nsg::cli::run(argc, argv); }
