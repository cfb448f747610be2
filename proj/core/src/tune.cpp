#include "ginimds/tune.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ginimds/parallel.hpp"
#include "ginimds/rng.hpp"

namespace ginimds {

namespace {

Matrix select_rows(const Matrix& X, const std::vector<int>& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), X.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = X.row(rows[i]);
  return out;
}

Embedding embed_distances(const DistanceMatrix& D, int p, EmbeddingMethod method,
                          std::uint64_t seed) {
  if (method == EmbeddingMethod::classical) return classical_mds(D, p);
  StressConfig config;
  config.seed = seed;
  switch (method) {
    case EmbeddingMethod::kruskal: config.loss = StressKind::kruskal; break;
    case EmbeddingMethod::huber: config.loss = StressKind::huber; break;
    case EmbeddingMethod::sammon: config.loss = StressKind::sammon; break;
    case EmbeddingMethod::smacof: config.loss = StressKind::smacof; break;
    case EmbeddingMethod::classical: break;
  }
  return minimize_stress(D, p, config);
}

// Seeded shuffle, then k contiguous blocks (the first n mod k blocks get one
// extra row). Indices within each fold are restored to ascending order: the
// fold is a set, and a canonical order keeps results independent of the
// shuffle inside each block.
std::vector<std::vector<int>> make_folds(int n, int k, std::uint64_t seed) {
  std::vector<int> indices(static_cast<std::size_t>(n));
  std::iota(indices.begin(), indices.end(), 0);
  Rng rng(seed);
  shuffle_indices(indices, rng);

  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
  const int base = n / k;
  const int extra = n % k;
  int offset = 0;
  for (int f = 0; f < k; ++f) {
    const int size = base + (f < extra ? 1 : 0);
    folds[static_cast<std::size_t>(f)].assign(indices.begin() + offset, indices.begin() + offset + size);
    std::sort(folds[static_cast<std::size_t>(f)].begin(), folds[static_cast<std::size_t>(f)].end());
    offset += size;
  }
  return folds;
}

}  // namespace

NuGrid NuGrid::linspace(double lo, double hi, int count) {
  if (count < 1) throw InvalidConfig("NuGrid: count must be >= 1");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    values.push_back(lo);
  } else {
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) values.push_back(lo + step * i);
    values.back() = hi;  // avoid drift on the endpoint
  }
  return from_values(std::move(values));
}

NuGrid NuGrid::from_values(std::vector<double> values) {
  if (values.empty()) throw InvalidConfig("NuGrid: empty grid");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 1.0)) throw InvalidConfig("NuGrid: every value must be > 1");
    if (i > 0 && !(values[i] > values[i - 1])) {
      throw InvalidConfig("NuGrid: values must be strictly increasing (no duplicates)");
    }
  }
  return NuGrid(std::move(values));
}

TuneReport tune_nu(const Matrix& X, int p, const NuGrid& grid, int k_folds,
                   EmbeddingMethod method, std::uint64_t seed) {
  const int n = static_cast<int>(X.rows());
  if (k_folds < 1) throw InvalidConfig("tune_nu: k_folds must be >= 1");
  if (n < k_folds) throw InvalidConfig("tune_nu: more folds than rows");
  const auto folds = make_folds(n, k_folds, seed);
  for (const auto& fold : folds) {
    if (static_cast<int>(fold.size()) < p + 1) {
      throw InvalidConfig("tune_nu: a fold has " + std::to_string(fold.size()) +
                          " points, need at least p + 1 = " + std::to_string(p + 1));
    }
  }

  const std::size_t grid_size = grid.size();
  // (nu, fold) cells are independent; each worker writes its own cell.
  std::vector<double> cell_stress(grid_size * static_cast<std::size_t>(k_folds), 0.0);
  parallel_for(static_cast<std::int64_t>(cell_stress.size()), [&](std::int64_t cell) {
    const std::size_t g = static_cast<std::size_t>(cell) / static_cast<std::size_t>(k_folds);
    const std::size_t f = static_cast<std::size_t>(cell) % static_cast<std::size_t>(k_folds);
    const Matrix fold_X = select_rows(X, folds[f]);
    const DistanceMatrix D = pairwise_matrix(fold_X, MetricSpec::gini(grid.values()[g]));
    if (D.matrix().maxCoeff() <= 0.0) {
      // All points coincide under this metric; any embedding is exact.
      cell_stress[static_cast<std::size_t>(cell)] = 0.0;
      return;
    }
    const Embedding embedding = embed_distances(D, p, method, seed);
    cell_stress[static_cast<std::size_t>(cell)] = kruskal_stress(embedding.coords, D);
  });

  TuneReport report;
  report.grid = grid.values();
  report.mean_stress.resize(grid_size);
  report.folds = k_folds;
  report.seed = seed;
  for (std::size_t g = 0; g < grid_size; ++g) {
    double acc = 0.0;
    for (int f = 0; f < k_folds; ++f) acc += cell_stress[g * static_cast<std::size_t>(k_folds) + static_cast<std::size_t>(f)];
    report.mean_stress[g] = acc / static_cast<double>(k_folds);
  }

  std::size_t best = 0;
  for (std::size_t g = 1; g < grid_size; ++g) {
    if (report.mean_stress[g] < report.mean_stress[best]) best = g;  // ties keep the smaller nu
  }
  report.nu_star = report.grid[best];

  const DistanceMatrix full = pairwise_matrix(X, MetricSpec::gini(report.nu_star));
  report.best_embedding = embed_distances(full, p, method, seed);
  return report;
}

AlternatingResult alternating_tune(const Matrix& X, int p, int outer_iters, const NuGrid& grid,
                                   std::uint64_t seed) {
  if (outer_iters < 1) throw InvalidConfig("alternating_tune: need at least one outer iteration");

  AlternatingResult result;
  double nu = 2.0;
  StressConfig sammon;
  sammon.loss = StressKind::sammon;
  sammon.seed = seed;

  for (int t = 0; t < outer_iters; ++t) {
    const DistanceMatrix D = pairwise_matrix(X, MetricSpec::gini(nu));
    result.embedding = minimize_stress(D, p, sammon);

    // Grid sweep: candidate distance matrices are independent, scored by
    // Kruskal stress against the fixed current embedding.
    std::vector<double> sweep(grid.size(), 0.0);
    parallel_for(static_cast<std::int64_t>(grid.size()), [&](std::int64_t g) {
      const DistanceMatrix Dg = pairwise_matrix(X, MetricSpec::gini(grid.values()[static_cast<std::size_t>(g)]));
      sweep[static_cast<std::size_t>(g)] = kruskal_stress(result.embedding.coords, Dg);
    });
    std::size_t best = 0;
    for (std::size_t g = 1; g < grid.size(); ++g) {
      if (sweep[g] < sweep[best]) best = g;
    }
    nu = grid.values()[best];
    result.nu_path.push_back(nu);
  }
  result.nu_star = nu;
  return result;
}

}  // namespace ginimds
