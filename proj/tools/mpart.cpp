#include "mpart/cli.hpp"

int main(int argc, char** argv) { return mpart::cli::dispatch(argc, argv); }
