#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace cddohs {

/// Explicitly seeded random source owned by one run.
///
/// Every helper consumes exactly one raw 64-bit draw from the underlying
/// mt19937_64 engine, so a stream is fully determined by the seed and the
/// sequence of calls. The conversions are written out here rather than
/// delegated to <random> distributions, whose output is not specified
/// bit-for-bit across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// One raw draw.
  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution. One raw draw.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi); returns lo when lo == hi. One raw draw.
  double uniform(double lo, double hi);

  /// Uniform index in [0, n). Requires n >= 1. One raw draw.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(unit() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace cddohs
