#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ginimds {

/// Derives an independent substream seed from (base, a, b) via splitmix64.
/// Streams are split by convention: data generators use one stream per
/// (seed, column), replicated experiments one per (seed, replication).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Seeded source of reproducible random variates.
///
/// The engine is std::mt19937_64 (output sequence fixed by the standard) and
/// every distribution is an explicit inverse-CDF or Box-Muller transform of
/// 53-bit uniforms, so streams are bit-identical across platforms and
/// standard-library versions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, bound) by rejection.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Standard normal, Box-Muller (two uniforms per variate).
  double normal();

  double cauchy();                 // location 0, scale 1
  double weibull(double shape);    // scale 1
  double pareto(double alpha);     // minimum 1
  double student_t2();             // 2 degrees of freedom, closed-form quantile
  double log_normal(double sigma); // exp(sigma * normal()), mu = 0

private:
  std::mt19937_64 gen_;
};

/// Portable Fisher-Yates shuffle (std::shuffle is implementation-defined).
void shuffle_indices(std::vector<int>& indices, Rng& rng);

}  // namespace ginimds
