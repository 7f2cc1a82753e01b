#include "chordalcad/cli.hpp"

int main(int argc, char** argv) { return chordalcad::run(argc, argv); }
