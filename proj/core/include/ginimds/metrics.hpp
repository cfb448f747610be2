#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>

#include "ginimds/error.hpp"

namespace ginimds {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Midranks of a real vector: each entry receives the average of the sorted
/// positions its tie group occupies, so ranks always sum to d(d+1)/2 and a
/// constant vector ranks uniformly at (d+1)/2.
struct RankVector {
  Vector ranks;
};

/// Empirical survival values of a vector, one per entry, from Hazen plotting
/// positions: F(z_j) = 1 - (R(z_j) - 1/2)/d. Strictly inside (0,1) and
/// strictly decreasing in the midrank. The survival value attached to the
/// origin is 1/2 by convention (a survival function symmetric about zero).
struct SurvivalVector {
  Vector values;
  double at_zero = 0.5;
};

/// Distribution-weight hyperparameter of the generalized Gini distance.
/// Construction rejects nu <= 1.
class GiniParams {
public:
  explicit GiniParams(double nu) : nu_(nu) {
    if (!(nu > 1.0)) throw InvalidConfig("GiniParams: nu must be > 1, got " + std::to_string(nu));
  }
  double nu() const noexcept { return nu_; }

private:
  double nu_;
};

/// Symmetric nonnegative dissimilarity matrix with zero diagonal.
class DistanceMatrix {
public:
  /// Validates symmetry (to 1e-12 relative), nonnegativity and zero diagonal.
  static DistanceMatrix from_matrix(Matrix m);

  int n() const noexcept { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

private:
  explicit DistanceMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Which pairwise dissimilarity to build.
struct MetricSpec {
  static MetricSpec euclidean() { return MetricSpec{}; }
  static MetricSpec gini(double nu) { return MetricSpec{GiniParams(nu)}; }

  bool is_gini() const noexcept { return params.has_value(); }
  std::optional<GiniParams> params;  // empty = Euclidean
};

/// Tie-adjusted ranks of v. Distinct entries get their 1-based ordinal
/// positions; tied entries share the midpoint of the positions the group
/// would occupy. Throws InvalidInput on non-finite entries or empty input.
RankVector midrank(const Vector& v);
RankVector midrank(std::span<const double> v);

/// Gini seminorm  ||x||_G = sum_j x_j (R(x_j) - (d+1)/2).
///
/// Zero for any constant vector (egalitarian distribution), absolutely
/// homogeneous, and subadditive; nonnegative because values and midranks
/// are comonotone.
double gini_norm(const Vector& x);
double gini_norm(std::span<const double> x);

/// Gini pseudo-distance  D_G(x, y) = ||x - y||_G.
/// Symmetric, nonnegative, satisfies the triangle inequality; vanishes when
/// x - y is constant, not only when x = y.
double gini_pseudo_distance(const Vector& x, const Vector& y);
double gini_pseudo_distance(std::span<const double> x, std::span<const double> y);

/// Hazen survival values of z (see SurvivalVector).
SurvivalVector empirical_survival(const Vector& z);
SurvivalVector empirical_survival(std::span<const double> z);

/// Directed generalized Gini dissimilarity
///   D_{G,nu}(x, y) = -d sum_j (x_j - y_j) (F^(nu-1)(x_j - y_j) - F^(nu-1)(0))
/// with F the empirical Hazen survival of the difference vector and
/// F(0) = 1/2. Not symmetric, and may be negative for skewed differences;
/// at nu = 2 it reduces exactly to gini_pseudo_distance.
double gen_gini_directed(const Vector& x, const Vector& y, const GiniParams& params);
double gen_gini_directed(std::span<const double> x, std::span<const double> y,
                         const GiniParams& params);

/// Symmetrized generalized Gini distance
///   (1/2) D_{G,nu}(x, y) + (1/2) D_{G,nu}(y, x),
/// clamped at zero (midrank ties can push the average a few ulp below zero
/// for nu outside {2, 3}). Symmetric, nonnegative, zero when x = y.
double gen_gini_distance(const Vector& x, const Vector& y, const GiniParams& params);
double gen_gini_distance(std::span<const double> x, std::span<const double> y,
                         const GiniParams& params);

/// Pairwise dissimilarity matrix over the rows of X (n >= 2). Entries are
/// computed independently pair by pair, so results do not depend on the
/// worker thread count.
DistanceMatrix pairwise_matrix(const Matrix& X, const MetricSpec& spec);

}  // namespace ginimds
