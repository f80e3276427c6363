#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "fmmc/conductance.hpp"
#include "fmmc/eigen.hpp"
#include "fmmc/graph.hpp"
#include "fmmc/matching.hpp"
#include "fmmc/spectral.hpp"

namespace {

fmmc::DenseMatrix random_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  fmmc::DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = normal(rng);
  return m;
}

void BM_Jacobi(benchmark::State& state) {
  const auto m = random_symmetric(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(fmmc::sym_eigs(m));
}
BENCHMARK(BM_Jacobi)->Arg(16)->Arg(64)->Arg(128);

void BM_FractionalMatching(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto g = fmmc::gen_family(fmmc::GraphFamily::kHypercube, dim);
  const auto f = fmmc::gaussian_embedding(g.num_vertices(), 8, 3);
  const auto w = fmmc::weights_from_embedding(g, f, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(fmmc::fractional_matching(w));
}
BENCHMARK(BM_FractionalMatching)->Arg(4)->Arg(5)->Arg(6);

void BM_ExactMatching(benchmark::State& state) {
  const auto g = fmmc::gen_family(fmmc::GraphFamily::kCycle, static_cast<int>(state.range(0)));
  const auto f = fmmc::gaussian_embedding(g.num_vertices(), 4, 5);
  const auto w = fmmc::weights_from_embedding(g, f, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(fmmc::max_matching_exact(w));
}
BENCHMARK(BM_ExactMatching)->Arg(12)->Arg(24)->Arg(40);

void BM_Conductance(benchmark::State& state) {
  const auto g = fmmc::gen_family(fmmc::GraphFamily::kCycle, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fmmc::vertex_conductance_exact(g));
}
BENCHMARK(BM_Conductance)->Arg(12)->Arg(16)->Arg(20);

void BM_Projection(benchmark::State& state) {
  const auto g = fmmc::gen_family(fmmc::GraphFamily::kHypercube, static_cast<int>(state.range(0)));
  const fmmc::FeasibleProjector projector(g);
  const auto m = random_symmetric(g.num_vertices(), 11);
  for (auto _ : state) benchmark::DoNotOptimize(projector.project(m));
}
BENCHMARK(BM_Projection)->Arg(3)->Arg(4)->Arg(5);

void BM_FmmcSolve(benchmark::State& state) {
  const auto g = fmmc::gen_family(fmmc::GraphFamily::kPath, static_cast<int>(state.range(0)));
  fmmc::FmmcOptions options;
  options.max_iterations = 500;
  for (auto _ : state) benchmark::DoNotOptimize(fmmc::fmmc_solve(g, options));
}
BENCHMARK(BM_FmmcSolve)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
