#include "seqgraph/cli.hpp"

int main(int argc, char** argv) { return seqgraph::cli_main(argc, argv); }
