#include "bellscope/behavior.hpp"
int main() { return 0; }
