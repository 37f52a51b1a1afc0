#include "oddspan/canon.hpp"
#include "oddspan/constructions.hpp"
#include "oddspan/cycles.hpp"
#include "oddspan/enumerate.hpp"
#include "oddspan/verify.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

using namespace oddspan;

namespace {

auto shuffled(const Graph& g, std::uint64_t seed) -> Graph {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

void BM_CanonicalizeBlowup(benchmark::State& state) {
  auto g = shuffled(balanced_cycle_blowup(static_cast<int>(state.range(0)), 4), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonicalize(g));
}
BENCHMARK(BM_CanonicalizeBlowup)->Arg(5)->Arg(9)->Arg(15);

void BM_CanonicalizePetersen(benchmark::State& state) {
  auto g = shuffled(petersen_graph(), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(canonicalize(g));
}
BENCHMARK(BM_CanonicalizePetersen);

void BM_ShortestOddCycle(benchmark::State& state) {
  auto g = bc_graph(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(shortest_odd_cycle(g));
}
BENCHMARK(BM_ShortestOddCycle)->Arg(3)->Arg(6)->Arg(12);

// absent lengths force the search to exhaust the block
void BM_HasCycleAbsent(benchmark::State& state) {
  auto g = bc_graph(2, 6);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(has_cycle_of_length(g, L));
}
BENCHMARK(BM_HasCycleAbsent)->Arg(7)->Arg(13)->Arg(19);

void BM_HasCyclePresent(benchmark::State& state) {
  auto g = shuffled(balanced_cycle_blowup(9, 5), 3);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(has_cycle_of_length(g, L));
}
BENCHMARK(BM_HasCyclePresent)->Arg(9)->Arg(19)->Arg(45);

void BM_Enumerate(benchmark::State& state) {
  EnumSpec spec;
  spec.n = static_cast<int>(state.range(0));
  spec.threads = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_graphs(spec, [](const Graph&) {}));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateTriangleFree(benchmark::State& state) {
  EnumSpec spec;
  spec.n = static_cast<int>(state.range(0));
  spec.exclude = OddFamily({3});
  spec.threads = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_graphs(spec, [](const Graph&) {}));
}
BENCHMARK(BM_EnumerateTriangleFree)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_RandomSearch(benchmark::State& state) {
  const OddFamily fam({3, 19});
  for (auto _ : state)
    benchmark::DoNotOptimize(random_counterexample_search(fam, 60, 1000, 42, 1));
}
BENCHMARK(BM_RandomSearch)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
