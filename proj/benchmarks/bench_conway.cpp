#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "knotfib/builders.hpp"
#include "knotfib/conway.hpp"

namespace {

knotfib::Diagram load(const char* name) {
  std::ifstream in(std::string(KNOTFIB_CORPUS_DIR) + "/" + name + ".pd");
  std::stringstream ss;
  ss << in.rdbuf();
  return knotfib::parse_pd(ss.str());
}

void torus(benchmark::State& state) {
  const knotfib::Diagram d = knotfib::torus_2n(static_cast<int>(state.range(0)));
  knotfib::ConwayOptions opts;
  opts.use_cache = false;
  for (auto _ : state) benchmark::DoNotOptimize(knotfib::conway(d, opts));
}
BENCHMARK(torus)->DenseRange(4, 12, 4);

void corpus_knot(benchmark::State& state, const char* name, bool cached) {
  const knotfib::Diagram d = load(name);
  knotfib::ConwayOptions opts;
  opts.use_cache = cached;
  for (auto _ : state) benchmark::DoNotOptimize(knotfib::conway(d, opts));
}
BENCHMARK_CAPTURE(corpus_knot, knot9_42_uncached, "knot9_42", false);
BENCHMARK_CAPTURE(corpus_knot, ten151_aa_uncached, "ten151_aa", false);
BENCHMARK_CAPTURE(corpus_knot, ten151_aa_cached, "ten151_aa", true);

}  // namespace

BENCHMARK_MAIN();
