#include "commands.hpp"

int main(int argc, char** argv) { return bpham::cli::run(argc, argv); }
