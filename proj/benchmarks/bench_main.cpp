#include <benchmark/benchmark.h>

#include "affvoa/characters.hpp"
#include "affvoa/pbw.hpp"
#include "affvoa/zhu.hpp"
#include "helpers.hpp"

using namespace affvoa;

// Fresh module per iteration: the operator caches would otherwise hide the real cost.
static void BM_SingularSolve(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const Rational k = depth == 3 ? Rational(-1) : Rational(-7, 3);
  for (auto _ : state) {
    VacuumModule V(3, k);
    benchmark::DoNotOptimize(V.singular_vectors(depth, {2, 1}));
  }
}
BENCHMARK(BM_SingularSolve)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(Rational(-7, 3), 3, depth));
}
BENCHMARK(BM_CharacterTable)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_VacuumTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_table(3, Rational(-1), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VacuumTable)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_IdealTower(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VacuumModule V(3, Rational(-1));
    IdealTower tower(V, {affvoa::testing::level_minus_one_u1(V), affvoa::testing::level_minus_one_u2(V)});
    benchmark::DoNotOptimize(tower.quotient_dimension(depth, {1, 1}));
  }
}
BENCHMARK(BM_IdealTower)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ZhuWeightZero(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VacuumModule V(3, Rational(-1));
    EnvelopingAlgebra U(3);
    ZhuMap Z(V, U);
    std::vector<EnvelopingElement> seeds = {Z.image(affvoa::testing::level_minus_one_u1(V)),
                                            Z.image(affvoa::testing::level_minus_one_u2(V))};
    benchmark::DoNotOptimize(weight_zero_elements(U, seeds, cap));
  }
}
BENCHMARK(BM_ZhuWeightZero)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
