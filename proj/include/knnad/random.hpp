#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace knnad {

/// Derives an independent stream seed from a base seed.
///
/// splitmix64 finalizer applied to base + GOLDEN * (stream + 1); documented so
/// that derived streams can be reproduced from a run manifest.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Seeded random source with portable variate algorithms.
///
/// The engine is std::mt19937_64 (output fully specified by the standard);
/// all distributions are implemented here rather than via <random>'s
/// implementation-defined distributions, so one seed yields one bit-exact
/// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased integer on [0, n), n >= 1.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard normal via the polar method (second deviate cached).
  double normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang, with the power boost for shape < 1.
  double gamma(double shape);

  /// Beta(a, b) as the two-Gamma ratio.
  double beta(double a, double b);

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<std::int64_t> permutation(std::int64_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace knnad
