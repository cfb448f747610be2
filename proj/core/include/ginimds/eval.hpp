#pragma once

#include <optional>
#include <vector>

#include "ginimds/metrics.hpp"

namespace ginimds {

/// Trustworthiness T(k): starts from 1 and subtracts
/// 2/(n k (2n - 3k - 1)) * sum over points i and over embedded-space
/// k-neighbors j that are not original-space k-neighbors of the amount by
/// which j's original-space rank exceeds k. Requires 1 <= k < n/2; neighbor
/// ranks use Euclidean distance, exclude self, and break ties by index.
double trustworthiness(const Matrix& X, const Matrix& coords, int k);

/// NN(k): fraction of embedded-space k-nearest neighbors sharing the query
/// point's label, averaged over all points. Requires 1 <= k <= n-1.
double nn_label_agreement(const Matrix& coords, const std::vector<int>& labels, int k);

/// Mean silhouette s_i = (n_i - d_i) / max(d_i, n_i) over all points, with
/// d_i the mean intra-class distance and n_i the smallest mean distance to
/// another class. Points in singleton classes score 0. Requires >= 2 classes.
double silhouette(const Matrix& coords, const std::vector<int>& labels);

struct DistanceCorrelations {
  double pearson = 0.0;
  double spearman = 0.0;
};

/// Pearson and Spearman correlations between the n(n-1)/2 pairwise Euclidean
/// distances of X and of coords. Spearman is Pearson on midranks.
DistanceCorrelations distance_correlations(const Matrix& X, const Matrix& coords);

struct EvalReport {
  std::optional<double> trustworthiness;
  std::optional<double> nn_agreement;  // labels required
  std::optional<double> silhouette;    // labels required
  double pearson = 0.0;
  double spearman = 0.0;
  int k_trust = 5;
  int k_nn = 10;
};

/// Convenience bundle: all metrics at once; label metrics are skipped when
/// labels is null.
EvalReport evaluate(const Matrix& X, const Matrix& coords, const std::vector<int>* labels,
                    int k_trust = 5, int k_nn = 10);

}  // namespace ginimds
