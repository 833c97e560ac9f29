#include <benchmark/benchmark.h>

#include "ddmc/classify.hpp"
#include "ddmc/generators.hpp"
#include "ddmc/minimize.hpp"

namespace {

void BM_DirectedMidpoint(benchmark::State& state) {
  const ddmc::LatticePoint x = {0, 3, -2, 7, 1, -4};
  const ddmc::LatticePoint y = {5, -1, 2, 0, 1, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddmc::directed_midpoint_pair(x, y));
  }
}
BENCHMARK(BM_DirectedMidpoint);

void BM_MidpointDecompose(benchmark::State& state) {
  const ddmc::LatticePoint x = {6, -5, 3, -2, 4, -6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddmc::midpoint_decompose(x));
  }
}
BENCHMARK(BM_MidpointDecompose);

void BM_DdmPairScan(benchmark::State& state) {
  ddmc::Rng rng(7);
  const auto q = ddmc::random_diag_dominant_quadratic(rng, 2);
  const ddmc::Box box(ddmc::LatticePoint{-static_cast<ddmc::Coord>(state.range(0)),
                                         -static_cast<ddmc::Coord>(state.range(0))},
                      ddmc::LatticePoint{static_cast<ddmc::Coord>(state.range(0)),
                                         static_cast<ddmc::Coord>(state.range(0))});
  const auto f = ddmc::make_quadratic(q, box);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddmc::is_ddm_convex(f, box));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(box.size() * (box.size() - 1) / 2) *
                          state.iterations());
}
BENCHMARK(BM_DdmPairScan)->Arg(4)->Arg(8);

void BM_EnvelopeLp(benchmark::State& state) {
  ddmc::Rng rng(11);
  const auto f = ddmc::random_binary_cube_table(rng, 4);
  std::vector<ddmc::Rational> z;
  for (int i = 0; i < 4; ++i) z.emplace_back(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddmc::local_convex_envelope(f, z));
  }
}
BENCHMARK(BM_EnvelopeLp);

void BM_SteepestDescent(benchmark::State& state) {
  ddmc::Rng rng(3);
  const auto q = ddmc::random_diag_dominant_quadratic(rng, 2);
  const ddmc::Box box(ddmc::LatticePoint{-8, -8}, ddmc::LatticePoint{8, 8});
  const auto f = ddmc::make_quadratic(q, box);
  ddmc::DescentOptions opts;
  opts.compute_distance = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddmc::steepest_descent(f, {8, -8}, opts));
  }
}
BENCHMARK(BM_SteepestDescent);

void BM_ScalingMinimize(benchmark::State& state) {
  ddmc::Rng rng(5);
  const auto q = ddmc::random_diag_dominant_quadratic(rng, 2);
  const ddmc::Box box(ddmc::LatticePoint{-16, -16}, ddmc::LatticePoint{16, 16});
  const auto f = ddmc::make_quadratic(q, box);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ddmc::scaling_minimize(f, {16, -16}));
  }
}
BENCHMARK(BM_ScalingMinimize);

}  // namespace

BENCHMARK_MAIN();
