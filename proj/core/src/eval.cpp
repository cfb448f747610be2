#include "ginimds/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace ginimds {

namespace {

Matrix squared_distances(const Matrix& X) {
  const int n = static_cast<int>(X.rows());
  Matrix D2 = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double sq = (X.row(i) - X.row(j)).squaredNorm();
      D2(i, j) = sq;
      D2(j, i) = sq;
    }
  }
  return D2;
}

// Indices 0..n-1 except i, ordered by (distance to i, index).
std::vector<int> neighbor_order(const Matrix& D2, int i) {
  const int n = static_cast<int>(D2.rows());
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n) - 1);
  for (int j = 0; j < n; ++j) {
    if (j != i) order.push_back(j);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (D2(i, a) != D2(i, b)) return D2(i, a) < D2(i, b);
    return a < b;
  });
  return order;
}

void check_labels(const Matrix& coords, const std::vector<int>& labels, const char* who) {
  if (static_cast<Eigen::Index>(labels.size()) != coords.rows()) {
    throw InvalidInput(std::string(who) + ": labels length does not match row count");
  }
}

}  // namespace

double trustworthiness(const Matrix& X, const Matrix& coords, int k) {
  const int n = static_cast<int>(X.rows());
  if (coords.rows() != n) throw InvalidInput("trustworthiness: row count mismatch");
  if (k < 1 || 2 * k >= n) {
    throw InvalidConfig("trustworthiness: requires 1 <= k < n/2, got k=" + std::to_string(k) +
                        ", n=" + std::to_string(n));
  }

  const Matrix orig2 = squared_distances(X);
  const Matrix emb2 = squared_distances(coords);

  double penalty = 0.0;
  std::vector<int> rank_in_orig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::vector<int> orig_order = neighbor_order(orig2, i);
    const std::vector<int> emb_order = neighbor_order(emb2, i);
    for (int r = 0; r < n - 1; ++r) rank_in_orig[static_cast<std::size_t>(orig_order[static_cast<std::size_t>(r)])] = r + 1;
    for (int r = 0; r < k; ++r) {
      const int j = emb_order[static_cast<std::size_t>(r)];
      const int orig_rank = rank_in_orig[static_cast<std::size_t>(j)];
      if (orig_rank > k) penalty += static_cast<double>(orig_rank - k);
    }
  }
  return 1.0 - 2.0 * penalty /
                   (static_cast<double>(n) * k * (2.0 * n - 3.0 * k - 1.0));
}

double nn_label_agreement(const Matrix& coords, const std::vector<int>& labels, int k) {
  const int n = static_cast<int>(coords.rows());
  check_labels(coords, labels, "nn_label_agreement");
  if (k < 1 || k > n - 1) {
    throw InvalidConfig("nn_label_agreement: requires 1 <= k <= n-1, got k=" + std::to_string(k) +
                        ", n=" + std::to_string(n));
  }
  const Matrix D2 = squared_distances(coords);
  long hits = 0;
  for (int i = 0; i < n; ++i) {
    const std::vector<int> order = neighbor_order(D2, i);
    for (int r = 0; r < k; ++r) {
      if (labels[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] == labels[static_cast<std::size_t>(i)]) ++hits;
    }
  }
  return static_cast<double>(hits) / (static_cast<double>(n) * k);
}

double silhouette(const Matrix& coords, const std::vector<int>& labels) {
  const int n = static_cast<int>(coords.rows());
  check_labels(coords, labels, "silhouette");

  std::map<int, int> class_sizes;
  for (int label : labels) ++class_sizes[label];
  if (class_sizes.size() < 2) throw InvalidConfig("silhouette: needs at least 2 classes");

  const Matrix D2 = squared_distances(coords);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (class_sizes[labels[static_cast<std::size_t>(i)]] == 1) continue;  // s_i = 0

    std::map<int, double> sum_to_class;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      sum_to_class[labels[static_cast<std::size_t>(j)]] += std::sqrt(D2(i, j));
    }
    double intra = 0.0;
    double nearest_other = std::numeric_limits<double>::infinity();
    for (const auto& [label, sum] : sum_to_class) {
      if (label == labels[static_cast<std::size_t>(i)]) {
        intra = sum / static_cast<double>(class_sizes[label] - 1);
      } else {
        nearest_other = std::min(nearest_other, sum / static_cast<double>(class_sizes[label]));
      }
    }
    const double denom = std::max(intra, nearest_other);
    if (denom > 0.0) total += (nearest_other - intra) / denom;
  }
  return total / static_cast<double>(n);
}

DistanceCorrelations distance_correlations(const Matrix& X, const Matrix& coords) {
  const int n = static_cast<int>(X.rows());
  if (coords.rows() != n) throw InvalidInput("distance_correlations: row count mismatch");
  if (n < 3) throw InvalidInput("distance_correlations: need n >= 3");

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  Vector a(static_cast<Eigen::Index>(pairs)), b(static_cast<Eigen::Index>(pairs));
  std::size_t t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++t) {
      a(static_cast<Eigen::Index>(t)) = (X.row(i) - X.row(j)).norm();
      b(static_cast<Eigen::Index>(t)) = (coords.row(i) - coords.row(j)).norm();
    }
  }

  auto pearson = [](const Vector& u, const Vector& v) {
    const double mu = u.mean(), mv = v.mean();
    double suv = 0.0, su = 0.0, sv = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      const double du = u(i) - mu, dv = v(i) - mv;
      suv += du * dv;
      su += du * du;
      sv += dv * dv;
    }
    if (su <= 0.0 || sv <= 0.0) {
      throw DegenerateInput("distance_correlations: zero-variance distance vector");
    }
    return suv / std::sqrt(su * sv);
  };

  DistanceCorrelations out;
  out.pearson = pearson(a, b);
  out.spearman = pearson(midrank(a).ranks, midrank(b).ranks);
  return out;
}

EvalReport evaluate(const Matrix& X, const Matrix& coords, const std::vector<int>* labels,
                    int k_trust, int k_nn) {
  EvalReport report;
  report.k_trust = k_trust;
  report.k_nn = k_nn;
  report.trustworthiness = trustworthiness(X, coords, k_trust);
  const DistanceCorrelations corr = distance_correlations(X, coords);
  report.pearson = corr.pearson;
  report.spearman = corr.spearman;
  if (labels != nullptr) {
    report.nn_agreement = nn_label_agreement(coords, *labels, k_nn);
    report.silhouette = silhouette(coords, *labels);
  }
  return report;
}

}  // namespace ginimds
