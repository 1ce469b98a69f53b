#include "eso/engine.hpp"

int main(int argc, char** argv) { return eso::run_cli(argc, argv); }
