// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "apexkit/apex.hpp"
#include "apexkit/enumerate.hpp"
#include "apexkit/moves.hpp"

using namespace apexkit;

namespace {

EnumSpec triangle_free_11() {
  EnumSpec s = EnumSpec::exact(11, 21);
  s.min_degree = 3;
  s.triangle_free = true;
  return s;
}

EnumSpec cubic_12() {
  EnumSpec s = EnumSpec::exact(12, 18);
  s.min_degree = s.max_degree = 3;
  s.connected = true;
  return s;
}

void enumerate_kernel(benchmark::State& state, EnumSpec spec) {
  EnumOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) {
    EnumResult r = enumerate(spec, o);
    benchmark::DoNotOptimize(r.classes.data());
    state.counters["classes"] = static_cast<double>(r.classes.size());
  }
}

void BM_EnumerateTriangleFree11(benchmark::State& state) { enumerate_kernel(state, triangle_free_11()); }
void BM_EnumerateCubic12(benchmark::State& state) { enumerate_kernel(state, cubic_12()); }

void BM_Closure(benchmark::State& state) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(state.range(0) != 0 ? saved : 1);
  for (auto _ : state) {
    ClosureFamily f = closure({complete_graph(7)}, {true, true}, {14, 21, 1000});
    benchmark::DoNotOptimize(f.ordered.data());
  }
  omp_set_num_threads(saved);
}

void BM_N2ASweep(benchmark::State& state) {
  static const std::vector<EnumClass> corpus = enumerate(triangle_free_11()).classes;
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    std::vector<std::uint8_t> flags(corpus.size());
    const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) flags[i] = is_n2a(corpus[i].graph);
    benchmark::DoNotOptimize(flags.data());
  }
}

}  // namespace

// Argument 0 runs the serial path, 1 the parallel one.
BENCHMARK(BM_EnumerateTriangleFree11)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCubic12)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_N2ASweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
