#include <benchmark/benchmark.h>

#include "ginimds/ginimds.hpp"

using namespace ginimds;

namespace {

Matrix random_matrix(std::uint64_t seed, int rows, int cols) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = 2.0 * rng.uniform01() - 1.0;
  }
  return m;
}

}  // namespace

static void BM_Midrank(benchmark::State& state) {
  Rng rng(1);
  Vector v(state.range(0));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.uniform01();
  for (auto _ : state) {
    benchmark::DoNotOptimize(midrank(v));
  }
}
BENCHMARK(BM_Midrank)->Arg(8)->Arg(64)->Arg(512);

static void BM_GenGiniDistance(benchmark::State& state) {
  Rng rng(2);
  const int d = static_cast<int>(state.range(0));
  Vector x(d), y(d);
  for (int i = 0; i < d; ++i) {
    x(i) = rng.normal();
    y(i) = rng.normal();
  }
  const GiniParams params(2.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_gini_distance(x, y, params));
  }
}
BENCHMARK(BM_GenGiniDistance)->Arg(4)->Arg(6)->Arg(32);

static void BM_PairwiseGini(benchmark::State& state) {
  const Matrix X = random_matrix(3, static_cast<int>(state.range(0)), 6);
  const MetricSpec spec = MetricSpec::gini(2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_matrix(X, spec));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseGini)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_PairwiseEuclidean(benchmark::State& state) {
  const Matrix X = random_matrix(4, static_cast<int>(state.range(0)), 6);
  const MetricSpec spec = MetricSpec::euclidean();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_matrix(X, spec));
  }
}
BENCHMARK(BM_PairwiseEuclidean)->Arg(128)->Arg(512);

static void BM_ClassicalMds(benchmark::State& state) {
  const Matrix X = random_matrix(5, static_cast<int>(state.range(0)), 6);
  const DistanceMatrix D = pairwise_matrix(X, MetricSpec::euclidean());
  for (auto _ : state) {
    benchmark::DoNotOptimize(classical_mds(D, 3));
  }
}
BENCHMARK(BM_ClassicalMds)->Arg(64)->Arg(256)->Arg(512);

static void BM_SmacofMinimize(benchmark::State& state) {
  const Matrix X = random_matrix(6, static_cast<int>(state.range(0)), 6);
  const DistanceMatrix D = pairwise_matrix(X, MetricSpec::gini(3.0));
  StressConfig config;
  config.loss = StressKind::smacof;
  config.max_iters = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_stress(D, 2, config));
  }
}
BENCHMARK(BM_SmacofMinimize)->Arg(64)->Arg(128);

static void BM_SammonMinimize(benchmark::State& state) {
  const Matrix X = random_matrix(7, static_cast<int>(state.range(0)), 6);
  const DistanceMatrix D = pairwise_matrix(X, MetricSpec::gini(3.0));
  StressConfig config;
  config.loss = StressKind::sammon;
  config.max_iters = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_stress(D, 2, config));
  }
}
BENCHMARK(BM_SammonMinimize)->Arg(64)->Arg(128);

static void BM_TuneNu(benchmark::State& state) {
  const Matrix X = random_matrix(8, static_cast<int>(state.range(0)), 4);
  const NuGrid grid = NuGrid::linspace(1.1, 5.0, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tune_nu(X, 2, grid, 5, EmbeddingMethod::classical, 1));
  }
}
BENCHMARK(BM_TuneNu)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
