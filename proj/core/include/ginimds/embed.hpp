#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginimds/metrics.hpp"

namespace ginimds {

enum class StressKind { kruskal, huber, sammon, smacof };

enum class EmbeddingMethod { classical, kruskal, huber, sammon, smacof };

const char* to_string(EmbeddingMethod m);
const char* to_string(StressKind k);

/// Configuration of the iterative stress minimizers.
struct StressConfig {
  StressKind loss = StressKind::smacof;
  /// Huber threshold; empty = auto (grid {0.5, 1, 2} x median off-diagonal
  /// distance, resolved inside minimize_stress).
  std::optional<double> huber_delta{};
  /// SMACOF weights; empty = uniform w_ij = 1.
  std::optional<Matrix> smacof_weights{};
  int max_iters = 300;
  double rel_tol = 1e-6;
  std::uint64_t seed = 0;
};

/// Low-dimensional configuration of points plus solver diagnostics.
struct Embedding {
  Matrix coords;       // n x p
  Vector eigenvalues;  // classical only: top-p spectrum, descending, pre-clamp
  double stress = 0.0;
  EmbeddingMethod method = EmbeddingMethod::classical;

  int clamped_count = 0;     // retained eigenvalues that were negative
  double clamped_mass = 0.0; // |negative| / total |eigenvalue| mass, all n
  bool converged = true;
  int iterations = 0;
  double huber_delta = 0.0;  // resolved threshold when method == huber
  std::vector<double> stress_history;  // objective per iterate, iterative methods
};

/// Gram matrix B = -1/2 H D2 H of a squared-distance matrix, with
/// H = I - (1/n) 1 1^T. Every row and column of B sums to zero.
/// Throws InvalidInput if D2 is asymmetric beyond 1e-9 * max|D2|, has a
/// nonzero diagonal, or negative entries.
Matrix double_center(const Matrix& squared_distances);

/// Torgerson scaling: eigendecompose B and scale the top-p eigenvectors by
/// the square roots of their (clamped) eigenvalues. Negative eigenvalues
/// among the retained ones are clamped to zero, with the clamped spectral
/// mass reported; the pre-clamp spectrum is kept for diagnostics. Column
/// signs are fixed by making the largest-magnitude entry positive.
Embedding classical_mds(const DistanceMatrix& D, int p);

/// Kruskal stress: sqrt( sum_{i<j} (|x_i - x_j| - d_ij)^2 / sum_{i<j} d_ij^2 ).
/// Throws DegenerateInput when D is all-zero.
double kruskal_stress(const Matrix& coords, const DistanceMatrix& D);

/// Evaluates one of the four objectives at the given configuration, with
/// e_ij = d_ij - |x_i - x_j|:
///   kruskal: the Kruskal stress above
///   huber:   sum rho_delta(e_ij), quadratic below delta, linear above
///   sammon:  (1 / sum d_ij) sum e_ij^2 / d_ij   (all off-diagonal d_ij > 0)
///   smacof:  sum w_ij e_ij^2
double stress_loss(StressKind kind, const Matrix& coords, const DistanceMatrix& D,
                   const StressConfig& config);

/// Analytic gradient of stress_loss with respect to coords (same shape).
/// Coincident embedded points contribute zero, the subgradient at the Huber
/// kink is taken from the quadratic branch.
Matrix stress_gradient(StressKind kind, const Matrix& coords, const DistanceMatrix& D,
                       const StressConfig& config);

/// Minimizes the configured objective starting from the classical-MDS
/// layout. SMACOF runs Guttman-transform majorization (stress never
/// increases); the other kinds run gradient descent with a backtracking
/// Armijo line search. Stops when the relative stress decrease drops below
/// rel_tol or after max_iters (non-convergence sets converged = false and
/// returns the best iterate).
Embedding minimize_stress(const DistanceMatrix& D, int p, const StressConfig& config);

}  // namespace ginimds
