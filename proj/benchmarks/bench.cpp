#include <benchmark/benchmark.h>

#include "kromatic/canonical.hpp"
#include "kromatic/generate.hpp"
#include "kromatic/independence.hpp"
#include "kromatic/ksf.hpp"

namespace {

using namespace kromatic;

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

void bm_canonical_form(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form);

void bm_fingerprint(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(ksf_fingerprint(g));
}
BENCHMARK(bm_fingerprint);

void bm_mbar_series(benchmark::State& state) {
  const Graph g = induced_subgraph(petersen(), std::uint64_t{0x3f});
  for (auto _ : state) benchmark::DoNotOptimize(ksf_mbar_truncated(g, g.n + 2));
}
BENCHMARK(bm_mbar_series);

}  // namespace

BENCHMARK_MAIN();
