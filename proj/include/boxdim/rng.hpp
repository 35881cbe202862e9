#pragma once

#include <cstdint>

#include "boxdim/point_set.hpp"

namespace boxdim {

/// SplitMix64: tiny, platform-independent generator so that seeded reports
/// are byte-identical everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for a numbered trial under one master seed.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (trial + 1)));
  return SplitMix64(mix.next());
}

/// Rational in [-2, 2] with denominator <= max_den.
Rational random_rational(SplitMix64& rng, unsigned max_den = 1024);

/// Set of 1..max_size random rationals (after deduplication the size can
/// shrink, never grow).
PointSet random_point_set(SplitMix64& rng, std::size_t max_size = 30, unsigned max_den = 1024);

}  // namespace boxdim
