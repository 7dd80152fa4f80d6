#include "rheat/cli.hpp"

int main(int argc, char** argv) { return rheat::dispatch(argc, argv); }
