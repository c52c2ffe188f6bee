#include <benchmark/benchmark.h>

#include "poco/classify.hpp"
#include "poco/graphs.hpp"
#include "poco/numth.hpp"
#include "poco/zoo.hpp"

namespace {

poco::grp::GroupPtr cached(const char* spec) {
  static std::map<std::string, poco::grp::GroupPtr> cache;
  auto& slot = cache[spec];
  if (!slot) slot = poco::zoo::build(poco::zoo::parse(spec), 100000);
  return slot;
}

void BM_GenerateGroup(benchmark::State& state, const char* spec) {
  auto parsed = poco::zoo::parse(spec);
  for (auto _ : state) {
    auto g = poco::zoo::build(parsed, 100000);
    benchmark::DoNotOptimize(g->order());
  }
}
BENCHMARK_CAPTURE(BM_GenerateGroup, psl2_7, "psl2:7");
BENCHMARK_CAPTURE(BM_GenerateGroup, m10, "m10");
BENCHMARK_CAPTURE(BM_GenerateGroup, natmod_4, "natmod:4");

void BM_ReducedPowerGraph(benchmark::State& state, const char* spec) {
  auto g = cached(spec);
  for (auto _ : state) {
    auto red = poco::graphs::reduced_power_graph(*g);
    benchmark::DoNotOptimize(red.graph.edge_count());
  }
}
BENCHMARK_CAPTURE(BM_ReducedPowerGraph, sym_6, "sym:6");
BENCHMARK_CAPTURE(BM_ReducedPowerGraph, psl2_13, "psl2:13");

void BM_IsCographReduced(benchmark::State& state, const char* spec) {
  auto g = cached(spec);
  auto red = poco::graphs::reduced_power_graph(*g);
  for (auto _ : state) benchmark::DoNotOptimize(poco::graphs::is_cograph(red.graph));
}
BENCHMARK_CAPTURE(BM_IsCographReduced, psl2_13, "psl2:13");
BENCHMARK_CAPTURE(BM_IsCographReduced, sym_6, "sym:6");

void BM_CentralizerVerdict(benchmark::State& state, const char* spec) {
  auto g = cached(spec);
  for (auto _ : state) {
    auto out = poco::classify::centralizer_verdict(g);
    benchmark::DoNotOptimize(out.verdict.is_power_cograph);
  }
}
BENCHMARK_CAPTURE(BM_CentralizerVerdict, alt_5, "alt:5");
BENCHMARK_CAPTURE(BM_CentralizerVerdict, pgl2_9, "pgl2:9");

void BM_Factorize(benchmark::State& state) {
  int64_t n = int64_t{1000003} * 1000033;
  for (auto _ : state) benchmark::DoNotOptimize(poco::numth::factorize(n).factors.size());
}
BENCHMARK(BM_Factorize);

void BM_SuzukiScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(poco::numth::scan(poco::numth::Family::SZ, 1 << 20).size());
}
BENCHMARK(BM_SuzukiScan);

}  // namespace

BENCHMARK_MAIN();
