#include "leechcert_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return leechcert::cli::run(argc, argv, std::cout, std::cerr); }
