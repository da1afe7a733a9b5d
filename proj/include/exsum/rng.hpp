#ifndef EXSUM_RNG_HPP
#define EXSUM_RNG_HPP

#include <cstdint>
#include <random>

namespace exsum {

/// Seedable, splittable pseudo-random stream. All draws are defined in
/// terms of raw 64-bit outputs of mt19937_64, so a seed reproduces the same
/// results on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(mix(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n must be positive. Rejection sampling, no modulo bias.
  std::uint64_t uniform(std::uint64_t n);

  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// True with probability 2^-level.
  bool keep_with_rate_pow2(unsigned level);

  bool coin() { return (next() >> 63) != 0; }

  /// Independent child stream; advances this stream by one draw.
  Rng split() { return Rng(next()); }

 private:
  static std::uint64_t mix(std::uint64_t x);
  std::mt19937_64 engine_;
};

}  // namespace exsum

#endif  // EXSUM_RNG_HPP
