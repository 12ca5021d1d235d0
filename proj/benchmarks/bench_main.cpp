#include <benchmark/benchmark.h>

#include "dncrystal/coincidence.hpp"
#include "dncrystal/crystal.hpp"
#include "dncrystal/minors.hpp"
#include "dncrystal/weyl.hpp"

using namespace dncrystal;

namespace {

void BM_SpinMinor(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minor_lower_spin(n, n));
}
BENCHMARK(BM_SpinMinor)->Arg(5)->Arg(8);

void BM_TropicalizeUpper(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  LaurentPoly p = minor_upper(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tropicalize(p, n));
}
BENCHMARK(BM_TropicalizeUpper)->Arg(5)->Arg(8);

void BM_MembershipDecoration(benchmark::State& state) {
  int n = 5;
  DominantWeight lm = DominantWeight::fundamental(n, 3);
  CrystalGraph g = generate(n, lm);
  const LatticePoint& x = g.nodes[g.nodes.size() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(membership_decoration(n, lm, x));
}
BENCHMARK(BM_MembershipDecoration);

void BM_Generate(benchmark::State& state) {
  DominantWeight lm = DominantWeight::fundamental(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(generate(4, lm));
}
BENCHMARK(BM_Generate);

void BM_BoxScan(benchmark::State& state) {
  DominantWeight lm({0, 2, 0, 0});
  long long bound = coincidence_box_bound(4, lm);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_members_polyhedral(4, lm, bound));
}
BENCHMARK(BM_BoxScan);

void BM_WeylDim(benchmark::State& state) {
  DominantWeight lm({1, 0, 2, 0, 0, 1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dim(8, lm));
}
BENCHMARK(BM_WeylDim);

}  // namespace

BENCHMARK_MAIN();
