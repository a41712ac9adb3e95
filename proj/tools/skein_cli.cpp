#include <cstdio>
int main(){ std::puts("skein cli: not wired yet"); return 0; }
