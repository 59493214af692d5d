// placeholder until the library is complete
#include <benchmark/benchmark.h>
BENCHMARK_MAIN();
