#pragma once

#include <cstdint>
#include <random>

#include "debruijn/counting.hpp"

namespace debruijn {

/// Seeded random source for the samplers.
///
/// Stream contract: the engine is std::mt19937_64 seeded through
/// std::seed_seq with the 32-bit words (seed_lo, seed_hi, stream_lo,
/// stream_hi). `Rng(seed)` is stream 0; `Rng::derived(seed, k)` gives the
/// independent stream used by worker k. Big-integer draws take whole 64-bit
/// outputs, most significant word first, mask the excess high bits and
/// reject values at or above the bound.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}
  static Rng derived(std::uint64_t seed, std::uint64_t stream) { return Rng(seed, stream); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  BigNat uniform_below(const BigNat& bound);
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace debruijn
