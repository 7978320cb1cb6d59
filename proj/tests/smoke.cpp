#include "adasub/evaluate.hpp"
int main() { return 0; }
