#include "ginimds/rng.hpp"

#include <cmath>
#include <numbers>

namespace ginimds {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t state = base;
  splitmix64(state);
  state ^= a * 0xd1342543de82ef95ULL;
  splitmix64(state);
  state ^= b * 0xaf251af3b0f025b5ULL;
  return splitmix64(state);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection sample from the largest multiple of bound below 2^64.
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  for (;;) {
    const std::uint64_t x = gen_();
    if (x < limit) return x % bound;
  }
}

double Rng::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::cauchy() {
  return std::tan(std::numbers::pi * (uniform01() - 0.5));
}

double Rng::weibull(double shape) {
  return std::pow(-std::log(uniform01()), 1.0 / shape);
}

double Rng::pareto(double alpha) {
  return std::pow(uniform01(), -1.0 / alpha);
}

double Rng::student_t2() {
  // F^-1(p) = (2p - 1) / sqrt(2 p (1 - p)) for the t distribution with 2 dof.
  const double p = uniform01();
  return (2.0 * p - 1.0) / std::sqrt(2.0 * p * (1.0 - p));
}

double Rng::log_normal(double sigma) { return std::exp(sigma * normal()); }

void shuffle_indices(std::vector<int>& indices, Rng& rng) {
  for (std::size_t i = indices.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(indices[i - 1], indices[j]);
  }
}

}  // namespace ginimds
