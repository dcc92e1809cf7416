#include "trigverify/cli.hpp"

int main(int argc, char** argv) { return trigverify::cli::run(argc, argv); }
