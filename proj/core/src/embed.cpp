#include "ginimds/embed.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ginimds {

namespace {

constexpr double kTiny = 1e-300;

void check_coords(const Matrix& coords, const DistanceMatrix& D, const char* who) {
  if (coords.rows() != D.n()) {
    throw InvalidInput(std::string(who) + ": coords rows (" + std::to_string(coords.rows()) +
                       ") do not match distance matrix size (" + std::to_string(D.n()) + ")");
  }
  if (!coords.allFinite()) throw InvalidInput(std::string(who) + ": non-finite coordinates");
}

double offdiag_squared_sum(const DistanceMatrix& D) {
  const int n = D.n();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) total += D(i, j) * D(i, j);
  }
  return total;
}

double embedded_distance(const Matrix& coords, int i, int j) {
  return (coords.row(i) - coords.row(j)).norm();
}

double median_offdiag(const DistanceMatrix& D) {
  const int n = D.n();
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) v.push_back(D(i, j));
  }
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return (m % 2 == 1) ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

struct LossParams {
  double huber_delta = 0.0;
  double sammon_scale = 0.0;       // 1 / sum d_ij
  const Matrix* weights = nullptr; // smacof, may stay null for uniform
};

LossParams resolve_params(StressKind kind, const DistanceMatrix& D, const StressConfig& config,
                          const char* who) {
  LossParams p;
  const int n = D.n();
  switch (kind) {
    case StressKind::kruskal:
      if (offdiag_squared_sum(D) <= 0.0) {
        throw DegenerateInput(std::string(who) + ": all-zero distance matrix");
      }
      break;
    case StressKind::huber:
      if (!config.huber_delta.has_value()) {
        throw InvalidConfig(std::string(who) +
                            ": huber_delta auto mode is resolved by minimize_stress; "
                            "pass an explicit delta here");
      }
      if (!(*config.huber_delta > 0.0)) {
        throw InvalidConfig(std::string(who) + ": huber_delta must be > 0");
      }
      p.huber_delta = *config.huber_delta;
      break;
    case StressKind::sammon: {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (D(i, j) <= 0.0) {
            throw DegenerateInput(std::string(who) +
                                  ": Sammon loss requires strictly positive off-diagonal "
                                  "distances (deduplicate points first)");
          }
          sum += D(i, j);
        }
      }
      p.sammon_scale = 1.0 / sum;
      break;
    }
    case StressKind::smacof:
      if (config.smacof_weights.has_value()) {
        const Matrix& w = *config.smacof_weights;
        if (w.rows() != n || w.cols() != n) {
          throw InvalidConfig(std::string(who) + ": smacof_weights size mismatch");
        }
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (!(w(i, j) >= 0.0) || std::abs(w(i, j) - w(j, i)) > 0.0) {
              throw InvalidConfig(std::string(who) +
                                  ": smacof_weights must be symmetric and nonnegative");
            }
          }
        }
        p.weights = &w;
      }
      break;
  }
  return p;
}

double loss_value(StressKind kind, const Matrix& coords, const DistanceMatrix& D,
                  const LossParams& p) {
  const int n = D.n();
  double acc = 0.0;
  switch (kind) {
    case StressKind::kruskal: {
      double num = 0.0, den = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double e = embedded_distance(coords, i, j) - D(i, j);
          num += e * e;
          den += D(i, j) * D(i, j);
        }
      }
      return std::sqrt(num / den);
    }
    case StressKind::huber: {
      const double delta = p.huber_delta;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double e = D(i, j) - embedded_distance(coords, i, j);
          const double a = std::abs(e);
          acc += (a <= delta) ? 0.5 * e * e : delta * (a - 0.5 * delta);
        }
      }
      return acc;
    }
    case StressKind::sammon: {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double e = D(i, j) - embedded_distance(coords, i, j);
          acc += e * e / D(i, j);
        }
      }
      return p.sammon_scale * acc;
    }
    case StressKind::smacof: {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double w = p.weights ? (*p.weights)(i, j) : 1.0;
          const double e = D(i, j) - embedded_distance(coords, i, j);
          acc += w * e * e;
        }
      }
      return acc;
    }
  }
  return acc;
}

// With dist_ij = |x_i - x_j| and e_ij = d_ij - dist_ij, each pair adds
// q_ij * (x_i - x_j)/dist_ij to gradient row i (negated for row j), where
// q_ij = dLoss/d(dist_ij).
Matrix gradient_value(StressKind kind, const Matrix& coords, const DistanceMatrix& D,
                      const LossParams& p) {
  const int n = D.n();
  Matrix grad = Matrix::Zero(coords.rows(), coords.cols());

  double kruskal_factor = 0.0;
  if (kind == StressKind::kruskal) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double e = embedded_distance(coords, i, j) - D(i, j);
        num += e * e;
        den += D(i, j) * D(i, j);
      }
    }
    const double ks = std::sqrt(num / den);
    if (ks <= 0.0) return grad;  // perfect fit: the sqrt is not differentiable, use 0
    kruskal_factor = 1.0 / (ks * den);
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = embedded_distance(coords, i, j);
      if (dist <= 0.0) continue;  // coincident points: subgradient 0
      const double e = D(i, j) - dist;
      double q = 0.0;
      switch (kind) {
        case StressKind::kruskal:
          q = -kruskal_factor * e;
          break;
        case StressKind::huber:
          q = -std::clamp(e, -p.huber_delta, p.huber_delta);
          break;
        case StressKind::sammon:
          q = -2.0 * p.sammon_scale * e / D(i, j);
          break;
        case StressKind::smacof:
          q = -2.0 * (p.weights ? (*p.weights)(i, j) : 1.0) * e;
          break;
      }
      for (int t = 0; t < coords.cols(); ++t) {
        const double g = q * (coords(i, t) - coords(j, t)) / dist;
        grad(i, t) += g;
        grad(j, t) -= g;
      }
    }
  }
  return grad;
}

struct IterativeResult {
  Matrix coords;
  double loss = 0.0;
  bool converged = true;
  int iterations = 0;
  std::vector<double> history;
};

IterativeResult gradient_descent(StressKind kind, Matrix coords, const DistanceMatrix& D,
                                 const LossParams& p, int max_iters, double rel_tol) {
  IterativeResult r;
  double f = loss_value(kind, coords, D, p);
  r.history.push_back(f);
  double step = 1.0;
  constexpr double armijo = 1e-4;

  int it = 0;
  bool stalled = false;
  for (; it < max_iters; ++it) {
    const Matrix grad = gradient_value(kind, coords, D, p);
    const double grad_sq = grad.squaredNorm();
    if (grad_sq <= 0.0) {
      stalled = true;
      break;
    }
    double f_new = f;
    Matrix trial;
    bool accepted = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      trial = coords - step * grad;
      f_new = loss_value(kind, trial, D, p);
      if (f_new <= f - armijo * step * grad_sq) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      stalled = true;  // no descent direction at double precision
      break;
    }
    coords = std::move(trial);
    r.history.push_back(f_new);
    const double decrease = (f - f_new) / std::max(f, kTiny);
    f = f_new;
    step *= 2.0;
    if (decrease < rel_tol) {
      ++it;
      stalled = true;
      break;
    }
  }

  r.coords = std::move(coords);
  r.loss = f;
  r.iterations = it;
  r.converged = stalled || it < max_iters;
  return r;
}

// One Guttman transform: X+ = V^+ B(Z) Z, which never increases
// sum w_ij (d_ij - dist_ij)^2. For uniform weights V^+ B(Z) Z = (1/n) B(Z) Z.
Matrix guttman_transform(const Matrix& Z, const DistanceMatrix& D, const Matrix* weights,
                         const Matrix* v_pinv) {
  const int n = D.n();
  Matrix B = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = embedded_distance(Z, i, j);
      if (dist <= 0.0) continue;
      const double w = weights ? (*weights)(i, j) : 1.0;
      const double b = -w * D(i, j) / dist;
      B(i, j) = b;
      B(j, i) = b;
      B(i, i) -= b;
      B(j, j) -= b;
    }
  }
  if (v_pinv) return (*v_pinv) * (B * Z);
  return (B * Z) / static_cast<double>(n);
}

IterativeResult smacof_iterate(Matrix coords, const DistanceMatrix& D, const LossParams& p,
                               int max_iters, double rel_tol) {
  IterativeResult r;
  const int n = D.n();

  // General weights need the pseudo-inverse of V (V_ij = -w_ij,
  // V_ii = sum_j w_ij); computed once per call.
  Matrix v_pinv;
  const bool uniform = (p.weights == nullptr);
  if (!uniform) {
    Matrix V = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double w = (*p.weights)(i, j);
        V(i, j) = -w;
        V(i, i) += w;
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(V);
    if (es.info() != Eigen::Success) throw NumericFailure("smacof: eigensolver failed on V");
    const Vector& lambda = es.eigenvalues();
    const double cutoff = 1e-12 * std::max(lambda.cwiseAbs().maxCoeff(), 1.0);
    Vector inv = Vector::Zero(n);
    for (int i = 0; i < n; ++i) inv(i) = (lambda(i) > cutoff) ? 1.0 / lambda(i) : 0.0;
    v_pinv = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
  }

  double f = loss_value(StressKind::smacof, coords, D, p);
  r.history.push_back(f);
  int it = 0;
  bool reached_tol = false;
  for (; it < max_iters; ++it) {
    Matrix next = guttman_transform(coords, D, p.weights, uniform ? nullptr : &v_pinv);
    const double f_new = loss_value(StressKind::smacof, next, D, p);
    coords = std::move(next);
    r.history.push_back(f_new);
    const double decrease = (f - f_new) / std::max(f, kTiny);
    f = f_new;
    if (decrease < rel_tol) {
      ++it;
      reached_tol = true;
      break;
    }
  }

  r.coords = std::move(coords);
  r.loss = f;
  r.iterations = it;
  r.converged = reached_tol || it < max_iters;
  return r;
}

EmbeddingMethod method_of(StressKind kind) {
  switch (kind) {
    case StressKind::kruskal: return EmbeddingMethod::kruskal;
    case StressKind::huber: return EmbeddingMethod::huber;
    case StressKind::sammon: return EmbeddingMethod::sammon;
    case StressKind::smacof: return EmbeddingMethod::smacof;
  }
  return EmbeddingMethod::smacof;
}

}  // namespace

const char* to_string(EmbeddingMethod m) {
  switch (m) {
    case EmbeddingMethod::classical: return "classical";
    case EmbeddingMethod::kruskal: return "kruskal";
    case EmbeddingMethod::huber: return "huber";
    case EmbeddingMethod::sammon: return "sammon";
    case EmbeddingMethod::smacof: return "smacof";
  }
  return "?";
}

const char* to_string(StressKind k) {
  switch (k) {
    case StressKind::kruskal: return "kruskal";
    case StressKind::huber: return "huber";
    case StressKind::sammon: return "sammon";
    case StressKind::smacof: return "smacof";
  }
  return "?";
}

Matrix double_center(const Matrix& squared_distances) {
  const Matrix& S = squared_distances;
  const Eigen::Index n = S.rows();
  if (n < 1 || S.cols() != n) throw InvalidInput("double_center: matrix is not square");
  if (!S.allFinite()) throw InvalidInput("double_center: non-finite entry");
  const double scale = std::max(S.cwiseAbs().maxCoeff(), 1.0);
  const double tol = 1e-9 * scale;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(S(i, i)) > tol) throw InvalidInput("double_center: nonzero diagonal");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(S(i, j) - S(j, i)) > tol) {
        throw InvalidInput("double_center: asymmetric input beyond tolerance");
      }
      if (S(i, j) < -tol) throw InvalidInput("double_center: negative squared distance");
    }
  }

  // B_ij = -1/2 (S_ij - r_i - r_j + g) equals H S H for symmetric S; the
  // upper triangle is mirrored so B comes out bitwise symmetric.
  const Vector r = S.rowwise().mean();
  const double g = r.mean();
  Matrix B(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    B(i, i) = -0.5 * (S(i, i) - r(i) - r(i) + g);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = -0.5 * (S(i, j) - r(i) - r(j) + g);
      B(i, j) = v;
      B(j, i) = v;
    }
  }
  return B;
}

Embedding classical_mds(const DistanceMatrix& D, int p) {
  const int n = D.n();
  if (p < 1 || p > n - 1) {
    throw InvalidInput("classical_mds: target dimension must satisfy 1 <= p <= n-1, got p=" +
                       std::to_string(p) + " with n=" + std::to_string(n));
  }

  const Matrix B = double_center(D.matrix().cwiseProduct(D.matrix()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(B);
  if (es.info() != Eigen::Success) throw NumericFailure("classical_mds: eigensolver failed");

  // Eigen returns ascending order; spectrum wanted descending.
  const Vector& lambda_asc = es.eigenvalues();
  double negative_mass = 0.0, total_mass = 0.0;
  for (int i = 0; i < n; ++i) {
    total_mass += std::abs(lambda_asc(i));
    if (lambda_asc(i) < 0.0) negative_mass += -lambda_asc(i);
  }

  Embedding out;
  out.method = EmbeddingMethod::classical;
  out.eigenvalues.resize(p);
  out.coords.resize(n, p);
  out.clamped_mass = total_mass > 0.0 ? negative_mass / total_mass : 0.0;
  for (int c = 0; c < p; ++c) {
    const int src = n - 1 - c;
    const double lambda = lambda_asc(src);
    out.eigenvalues(c) = lambda;
    Vector v = es.eigenvectors().col(src);
    // Deterministic sign: largest-magnitude entry positive, first index wins ties.
    int arg = 0;
    double best = std::abs(v(0));
    for (int i = 1; i < n; ++i) {
      if (std::abs(v(i)) > best) {
        best = std::abs(v(i));
        arg = i;
      }
    }
    if (v(arg) < 0.0) v = -v;
    if (lambda < 0.0) ++out.clamped_count;
    out.coords.col(c) = v * std::sqrt(std::max(lambda, 0.0));
  }

  out.stress = offdiag_squared_sum(D) > 0.0 ? kruskal_stress(out.coords, D) : 0.0;
  return out;
}

double kruskal_stress(const Matrix& coords, const DistanceMatrix& D) {
  check_coords(coords, D, "kruskal_stress");
  const int n = D.n();
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double e = embedded_distance(coords, i, j) - D(i, j);
      num += e * e;
      den += D(i, j) * D(i, j);
    }
  }
  if (den <= 0.0) throw DegenerateInput("kruskal_stress: all-zero distance matrix");
  return std::sqrt(num / den);
}

double stress_loss(StressKind kind, const Matrix& coords, const DistanceMatrix& D,
                   const StressConfig& config) {
  check_coords(coords, D, "stress_loss");
  const LossParams p = resolve_params(kind, D, config, "stress_loss");
  return loss_value(kind, coords, D, p);
}

Matrix stress_gradient(StressKind kind, const Matrix& coords, const DistanceMatrix& D,
                       const StressConfig& config) {
  check_coords(coords, D, "stress_gradient");
  const LossParams p = resolve_params(kind, D, config, "stress_gradient");
  return gradient_value(kind, coords, D, p);
}

Embedding minimize_stress(const DistanceMatrix& D, int p, const StressConfig& config) {
  if (config.max_iters < 1) throw InvalidConfig("minimize_stress: max_iters must be >= 1");
  if (!(config.rel_tol > 0.0)) throw InvalidConfig("minimize_stress: rel_tol must be > 0");

  const Matrix init = classical_mds(D, p).coords;

  // Huber auto mode: candidate thresholds from the distance scale; the
  // final embedding with the lowest Kruskal stress wins, ties to smaller.
  if (config.loss == StressKind::huber && !config.huber_delta.has_value()) {
    const double med = median_offdiag(D);
    const double base = med > 0.0 ? med : 1.0;
    Embedding best;
    double best_ks = std::numeric_limits<double>::infinity();
    for (const double factor : {0.5, 1.0, 2.0}) {
      StressConfig trial = config;
      trial.huber_delta = factor * base;
      Embedding e = minimize_stress(D, p, trial);
      const double ks = kruskal_stress(e.coords, D);
      if (ks < best_ks) {
        best_ks = ks;
        best = std::move(e);
      }
    }
    return best;
  }

  const LossParams params = resolve_params(config.loss, D, config, "minimize_stress");
  IterativeResult r =
      (config.loss == StressKind::smacof)
          ? smacof_iterate(init, D, params, config.max_iters, config.rel_tol)
          : gradient_descent(config.loss, init, D, params, config.max_iters, config.rel_tol);

  Embedding out;
  out.coords = std::move(r.coords);
  out.stress = r.loss;
  out.method = method_of(config.loss);
  out.converged = r.converged;
  out.iterations = r.iterations;
  out.stress_history = std::move(r.history);
  if (config.loss == StressKind::huber) out.huber_delta = *config.huber_delta;
  return out;
}

}  // namespace ginimds
