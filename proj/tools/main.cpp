#include "cli.hpp"

int main(int argc, char** argv) { return pairclust::cli::dispatch(argc, argv); }
