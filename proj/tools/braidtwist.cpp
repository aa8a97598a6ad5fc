#include "braidtwist/cli.hpp"

int main(int argc, char** argv) { return braidtwist::cli::run(argc, argv); }
