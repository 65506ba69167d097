#include "nestfan/cli.hpp"

int main(int argc, char** argv) { return nestfan::run(argc, argv); }
