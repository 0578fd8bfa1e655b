#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "knotfib/builders.hpp"
#include "knotfib/decide.hpp"

namespace {

knotfib::Diagram load(const char* name) {
  std::ifstream in(std::string(KNOTFIB_CORPUS_DIR) + "/" + name + ".pd");
  std::stringstream ss;
  ss << in.rdbuf();
  return knotfib::parse_pd(ss.str());
}

void corpus_entry(benchmark::State& state, const char* name) {
  const knotfib::Diagram d = load(name);
  for (auto _ : state) {
    knotfib::clear_conway_cache();
    benchmark::DoNotOptimize(knotfib::decide_fiber(d));
  }
}
BENCHMARK_CAPTURE(corpus_entry, trefoil_std, "trefoil_std");
BENCHMARK_CAPTURE(corpus_entry, fig8_braid, "fig8_braid");
BENCHMARK_CAPTURE(corpus_entry, ten151_aa, "ten151_aa");
BENCHMARK_CAPTURE(corpus_entry, unnested_aa_3, "unnested_aa_3");

void torus_family(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 2; n <= 8; ++n) benchmark::DoNotOptimize(knotfib::decide_fiber(knotfib::torus_2n(n)));
}
BENCHMARK(torus_family);

void random_almost_alternating(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<knotfib::Diagram> pool;
  for (int i = 0; i < 32; ++i) {
    knotfib::PlaneGraph g = knotfib::random_plane_bipartite(rng, static_cast<int>(state.range(0)));
    for (auto& s : g.signs) s = 1;
    g.signs.front() = -1;
    pool.push_back(knotfib::plane_graph_diagram(g));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(knotfib::decide_fiber(pool[i++ % pool.size()]));
}
BENCHMARK(random_almost_alternating)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
