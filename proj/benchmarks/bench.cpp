#include <benchmark/benchmark.h>

#include "colnum/admissibility.hpp"
#include "colnum/augmentation.hpp"
#include "colnum/cover.hpp"
#include "colnum/exact.hpp"
#include "colnum/games.hpp"
#include "colnum/generate.hpp"
#include "colnum/minor_density.hpp"
#include "colnum/reach.hpp"

using namespace colnum;

static void BM_WeakReachSizes(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  auto g = make_grid(side, side);
  auto pi = degeneracy_order(g).order;
  for (auto _ : state) {
    auto sizes = weak_reach_sizes(g, pi, Radius(3));
    benchmark::DoNotOptimize(sizes);
  }
  state.SetComplexityN(side * side);
}
BENCHMARK(BM_WeakReachSizes)->Arg(6)->Arg(10)->Arg(14)->Complexity();

static void BM_CounterGame(benchmark::State& state) {
  auto g = make_grid(8, 8);
  auto pi = degeneracy_order(g).order;
  for (auto _ : state) benchmark::DoNotOptimize(counter_game(g, Radius(2), pi));
}
BENCHMARK(BM_CounterGame);

static void BM_GreedyAdmApprox(benchmark::State& state) {
  auto g = make_random_gnp(static_cast<int>(state.range(0)), 0.08, 11);
  for (auto _ : state) {
    auto res = greedy_adm_order(g, Radius(2), FanMode::approx);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_GreedyAdmApprox)->Arg(30)->Arg(60);

static void BM_FraternalAugment(benchmark::State& state) {
  auto g = make_bounded_degree_random(static_cast<int>(state.range(0)), 3, 5);
  for (auto _ : state) {
    auto seq = fraternal_augment(g, 3);
    benchmark::DoNotOptimize(seq.max_out_degree.back());
  }
}
BENCHMARK(BM_FraternalAugment)->Arg(50)->Arg(200);

static void BM_NeighborhoodCover(benchmark::State& state) {
  auto g = make_grid(8, 8);
  auto pi = degeneracy_order(g).order;
  for (auto _ : state) {
    auto cover = neighborhood_cover(g, pi, 2);
    benchmark::DoNotOptimize(cover.degree);
  }
}
BENCHMARK(BM_NeighborhoodCover);

static void BM_ExactWcol(benchmark::State& state) {
  auto g = make_random_gnp(8, 0.35, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_parameter(g, 2, Measure::wcol).value);
}
BENCHMARK(BM_ExactWcol);

static void BM_NablaExact(benchmark::State& state) {
  auto g = make_random_gnp(7, 0.4, 9);
  for (auto _ : state) benchmark::DoNotOptimize(nabla_exact(g, 1).density.num);
}
BENCHMARK(BM_NablaExact);

BENCHMARK_MAIN();
