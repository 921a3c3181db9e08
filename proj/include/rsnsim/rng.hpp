#pragma once

#include <cstdint>
#include <string_view>

namespace rsnsim {

/// Deterministic 64-bit generator: xoshiro256++ state seeded through
/// SplitMix64. Substreams are derived by mixing an FNV-1a hash of a label
/// into the parent seed, so each subsystem owns an independent sequence and
/// extra draws in one subsystem never perturb another.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  /// Child stream derived from this generator's seed and a fixed label.
  /// Independent of how many values the parent has produced.
  Rng fork(std::string_view label) const;

  uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  /// Uniform in [lo, hi); lo == hi returns lo, lo > hi is rejected.
  double uniform(double lo, double hi);

  /// Gaussian via Box-Muller on this stream.
  double normal(double mean, double stddev);

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t state_[4];
};

uint64_t splitmix64_next(uint64_t& state);
uint64_t fnv1a64(std::string_view text);

}  // namespace rsnsim
