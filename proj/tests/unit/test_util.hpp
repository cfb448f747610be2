#pragma once

#include <cmath>
#include <vector>

#include "ginimds/metrics.hpp"
#include "ginimds/rng.hpp"

namespace testutil {

using ginimds::Matrix;
using ginimds::Rng;
using ginimds::Vector;

/// Uniform entries in (-scale, scale).
inline Vector random_vector(Rng& rng, int d, double scale = 1.0) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = scale * (2.0 * rng.uniform01() - 1.0);
  return v;
}

/// Mixed-magnitude vector, occasionally with ties (values rounded to a
/// coarse lattice).
inline Vector random_vector_with_ties(Rng& rng, int d) {
  const double scale = std::pow(10.0, static_cast<double>(rng.uniform_below(5)) - 2.0);
  Vector v = random_vector(rng, d, scale);
  if (rng.uniform01() < 0.4) {
    for (int i = 0; i < d; ++i) v(i) = std::round(v(i) * 4.0 / scale) * scale / 4.0;
  }
  return v;
}

inline Matrix random_matrix(Rng& rng, int rows, int cols, double scale = 1.0) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = scale * (2.0 * rng.uniform01() - 1.0);
  }
  return m;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Independent midrank oracle: walk the sorted copy and average the
/// positions of every tie group.
inline std::vector<double> midrank_oracle(const std::vector<double>& v) {
  const int d = static_cast<int>(v.size());
  std::vector<int> order(v.size());
  for (int i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)]; });
  std::vector<double> ranks(v.size());
  int i = 0;
  while (i < d) {
    int j = i;
    while (j < d &&
           v[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
               v[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) {
      ++j;
    }
    double sum = 0.0;
    for (int k = i; k < j; ++k) sum += static_cast<double>(k + 1);
    const double rank = sum / static_cast<double>(j - i);
    for (int k = i; k < j; ++k) ranks[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = rank;
    i = j;
  }
  return ranks;
}

}  // namespace testutil
