#include "ginimds/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ginimds/parallel.hpp"

namespace ginimds {

namespace {

void check_finite(std::span<const double> v, const char* who) {
  if (v.empty()) throw InvalidInput(std::string(who) + ": input vector is empty");
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidInput(std::string(who) + ": non-finite input entry");
  }
}

void check_same_length(std::span<const double> x, std::span<const double> y, const char* who) {
  if (x.size() != y.size()) {
    throw InvalidInput(std::string(who) + ": length mismatch (" + std::to_string(x.size()) +
                       " vs " + std::to_string(y.size()) + ")");
  }
}

// Reused per call chain to keep the pairwise loops allocation-free.
struct Scratch {
  std::vector<int> order;
  std::vector<double> ranks;
  std::vector<double> diff;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Midranks into out[0..d): sort positions by value, then give every tie
// group the mean of the 1-based positions it occupies.
void midrank_into(std::span<const double> v, std::vector<int>& order, double* out) {
  const int d = static_cast<int>(v.size());
  order.resize(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)]; });
  int i = 0;
  while (i < d) {
    int j = i;
    const double value = v[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    while (j < d && v[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] == value) ++j;
    const double rank = 0.5 * static_cast<double>(i + 1 + j);  // mean of positions i+1..j
    for (int k = i; k < j; ++k) out[order[static_cast<std::size_t>(k)]] = rank;
    i = j;
  }
}

double gini_norm_impl(std::span<const double> x, Scratch& s) {
  const int d = static_cast<int>(x.size());
  s.ranks.resize(static_cast<std::size_t>(d));
  midrank_into(x, s.order, s.ranks.data());
  const double center = 0.5 * static_cast<double>(d + 1);
  double sum = 0.0;
  for (int j = 0; j < d; ++j) sum += x[static_cast<std::size_t>(j)] * (s.ranks[static_cast<std::size_t>(j)] - center);
  return sum;
}

// -d * sum_j z_j (F^(nu-1)(z_j) - F^(nu-1)(0)) on the difference vector z.
double gen_gini_directed_impl(std::span<const double> z, double nu, Scratch& s) {
  const int d = static_cast<int>(z.size());
  s.ranks.resize(static_cast<std::size_t>(d));
  midrank_into(z, s.order, s.ranks.data());
  const double exponent = nu - 1.0;
  const double inv_d = 1.0 / static_cast<double>(d);
  const double survival_at_zero = std::pow(0.5, exponent);
  double sum = 0.0;
  for (int j = 0; j < d; ++j) {
    const double survival = 1.0 - (s.ranks[static_cast<std::size_t>(j)] - 0.5) * inv_d;
    sum += z[static_cast<std::size_t>(j)] * (std::pow(survival, exponent) - survival_at_zero);
  }
  return -static_cast<double>(d) * sum;
}

double gen_gini_directed_checked(std::span<const double> x, std::span<const double> y, double nu,
                                 Scratch& s) {
  check_same_length(x, y, "gen_gini_directed");
  check_finite(x, "gen_gini_directed");
  check_finite(y, "gen_gini_directed");
  const std::size_t d = x.size();
  s.diff.resize(d);
  for (std::size_t j = 0; j < d; ++j) s.diff[j] = x[j] - y[j];
  return gen_gini_directed_impl(s.diff, nu, s);
}

std::span<const double> as_span(const Vector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

}  // namespace

RankVector midrank(std::span<const double> v) {
  check_finite(v, "midrank");
  Scratch& s = scratch();
  RankVector out;
  out.ranks.resize(static_cast<Eigen::Index>(v.size()));
  midrank_into(v, s.order, out.ranks.data());
  return out;
}

RankVector midrank(const Vector& v) { return midrank(as_span(v)); }

double gini_norm(std::span<const double> x) {
  check_finite(x, "gini_norm");
  return gini_norm_impl(x, scratch());
}

double gini_norm(const Vector& x) { return gini_norm(as_span(x)); }

double gini_pseudo_distance(std::span<const double> x, std::span<const double> y) {
  check_same_length(x, y, "gini_pseudo_distance");
  check_finite(x, "gini_pseudo_distance");
  check_finite(y, "gini_pseudo_distance");
  Scratch& s = scratch();
  s.diff.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) s.diff[j] = x[j] - y[j];
  return gini_norm_impl(s.diff, s);
}

double gini_pseudo_distance(const Vector& x, const Vector& y) {
  return gini_pseudo_distance(as_span(x), as_span(y));
}

SurvivalVector empirical_survival(std::span<const double> z) {
  check_finite(z, "empirical_survival");
  const int d = static_cast<int>(z.size());
  Scratch& s = scratch();
  s.ranks.resize(static_cast<std::size_t>(d));
  midrank_into(z, s.order, s.ranks.data());
  SurvivalVector out;
  out.values.resize(d);
  const double inv_d = 1.0 / static_cast<double>(d);
  for (int j = 0; j < d; ++j) out.values[j] = 1.0 - (s.ranks[static_cast<std::size_t>(j)] - 0.5) * inv_d;
  return out;
}

SurvivalVector empirical_survival(const Vector& z) { return empirical_survival(as_span(z)); }

double gen_gini_directed(std::span<const double> x, std::span<const double> y,
                         const GiniParams& params) {
  return gen_gini_directed_checked(x, y, params.nu(), scratch());
}

double gen_gini_directed(const Vector& x, const Vector& y, const GiniParams& params) {
  return gen_gini_directed(as_span(x), as_span(y), params);
}

double gen_gini_distance(std::span<const double> x, std::span<const double> y,
                         const GiniParams& params) {
  Scratch& s = scratch();
  const double forward = gen_gini_directed_checked(x, y, params.nu(), s);
  const double backward = gen_gini_directed_checked(y, x, params.nu(), s);
  return std::max(0.0, 0.5 * forward + 0.5 * backward);
}

double gen_gini_distance(const Vector& x, const Vector& y, const GiniParams& params) {
  return gen_gini_distance(as_span(x), as_span(y), params);
}

DistanceMatrix DistanceMatrix::from_matrix(Matrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("DistanceMatrix: matrix is not square");
  if (m.rows() < 1) throw InvalidInput("DistanceMatrix: matrix is empty");
  const double scale = m.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, i)) > tol) throw InvalidInput("DistanceMatrix: nonzero diagonal");
    m(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const double a = m(i, j);
      const double b = m(j, i);
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidInput("DistanceMatrix: non-finite entry");
      }
      if (std::abs(a - b) > tol) throw InvalidInput("DistanceMatrix: asymmetric entries");
      if (a < -tol || b < -tol) throw InvalidInput("DistanceMatrix: negative entry");
      const double v = std::max(0.0, a);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(m));
}

DistanceMatrix pairwise_matrix(const Matrix& X, const MetricSpec& spec) {
  const int n = static_cast<int>(X.rows());
  const int d = static_cast<int>(X.cols());
  if (n < 2) throw InvalidInput("pairwise_matrix: need at least 2 rows");
  if (d < 1) throw InvalidInput("pairwise_matrix: need at least 1 column");

  // Rows copied once into contiguous storage; Eigen matrices are
  // column-major so row views are strided.
  std::vector<double> rows(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) rows[static_cast<std::size_t>(i) * d + j] = X(i, j);
  }
  auto row = [&](int i) {
    return std::span<const double>(rows.data() + static_cast<std::size_t>(i) * d,
                                   static_cast<std::size_t>(d));
  };

  Matrix D = Matrix::Zero(n, n);
  if (spec.is_gini()) {
    const GiniParams params = *spec.params;
    parallel_for(n, [&](std::int64_t i) {
      for (int j = static_cast<int>(i) + 1; j < n; ++j) {
        const double v = gen_gini_distance(row(static_cast<int>(i)), row(j), params);
        D(i, j) = v;
        D(j, static_cast<int>(i)) = v;
      }
    });
  } else {
    parallel_for(n, [&](std::int64_t i) {
      const auto xi = row(static_cast<int>(i));
      for (int j = static_cast<int>(i) + 1; j < n; ++j) {
        const auto xj = row(j);
        double sq = 0.0;
        for (int c = 0; c < d; ++c) {
          const double delta = xi[static_cast<std::size_t>(c)] - xj[static_cast<std::size_t>(c)];
          sq += delta * delta;
        }
        const double v = std::sqrt(sq);
        D(i, j) = v;
        D(j, static_cast<int>(i)) = v;
      }
    });
  }
  return DistanceMatrix::from_matrix(std::move(D));
}

}  // namespace ginimds
