#include <benchmark/benchmark.h>
int main0() { return 0; }
BENCHMARK_MAIN();
