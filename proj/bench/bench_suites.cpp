#include "qm/verify.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

void run(benchmark::State& state, const char* id, int n, bool parallel) {
    qm::RunOptions o;
    o.n = n;
    o.parallel = parallel;
    std::size_t cases = 0;
    for (auto _ : state) {
        const qm::SuiteReport r = qm::run_suite(id, o);
        if (!r.pass()) state.SkipWithError("suite failed");
        cases = r.cases;
    }
    state.counters["cases"] = static_cast<double>(cases);
}

}  // namespace

BENCHMARK_CAPTURE(run, S1_serial, "S1", 3, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, S1_omp, "S1", 3, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, S6_serial, "S6", 4, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, S6_omp, "S6", 4, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, S7_serial, "S7", 4, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, S7_omp, "S7", 4, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, S15_serial, "S15", 4, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, S15_omp, "S15", 4, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
