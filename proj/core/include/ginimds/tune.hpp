#pragma once

#include <cstdint>
#include <vector>

#include "ginimds/embed.hpp"

namespace ginimds {

/// Strictly increasing grid of candidate nu values, all > 1.
class NuGrid {
public:
  /// count evenly spaced values over [lo, hi]; the defaults cover the
  /// canonical 30-point grid on [1.1, 5].
  static NuGrid linspace(double lo = 1.1, double hi = 5.0, int count = 30);
  static NuGrid from_values(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

private:
  explicit NuGrid(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

struct TuneReport {
  std::vector<double> grid;         // nu values, ascending
  std::vector<double> mean_stress;  // mean Kruskal stress across folds, per nu
  double nu_star = 0.0;             // argmin, ties to the smaller nu
  Embedding best_embedding;         // refit on all rows at nu_star
  int folds = 0;
  std::uint64_t seed = 0;
};

/// Cross-validated nu selection: rows are shuffled (seeded) and split into
/// k contiguous blocks; for every (nu, fold) the fold's generalized Gini
/// distances are embedded to p dimensions and scored by Kruskal stress
/// against those distances. Fold indices are kept in ascending row order so
/// k_folds = 1 reduces exactly to an embedding of the full dataset.
/// method selects the per-fold MDS (classical by default).
/// Throws InvalidConfig when some fold has fewer than p + 1 points.
TuneReport tune_nu(const Matrix& X, int p, const NuGrid& grid, int k_folds,
                   EmbeddingMethod method = EmbeddingMethod::classical, std::uint64_t seed = 0);

struct AlternatingResult {
  Embedding embedding;          // Sammon fit from the final outer iteration
  double nu_star = 0.0;         // nu selected by the final grid sweep
  std::vector<double> nu_path;  // nu_star after each outer iteration
};

/// Alternating optimization, starting at nu = 2: each outer iteration
/// (a) minimizes the Sammon loss of an embedding against the current
/// generalized Gini distances, (b) sweeps the grid for the nu whose
/// distances best match the embedding by Kruskal stress, (c) adopts it.
AlternatingResult alternating_tune(const Matrix& X, int p, int outer_iters, const NuGrid& grid,
                                   std::uint64_t seed = 0);

}  // namespace ginimds
