#include <cstdio>
int main() { std::puts("trapeze: cli pending"); return 0; }
