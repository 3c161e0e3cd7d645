#include "spiralcert/cli.hpp"

int main(int argc, char** argv) { return spiralcert::cli::run(argc, argv); }
