#pragma once

#include <cstdint>
#include <random>

#include "veronese/rational.hpp"

namespace veronese {

/// Seeded source of small rationals. Draws use only the raw 64-bit engine
/// output, so sequences are identical across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// p / d with |p| <= magnitude and 1 <= d <= magnitude; 0 when magnitude == 0.
  Rational rational(int magnitude);
  /// As rational() but never zero (magnitude must be >= 1).
  Rational nonzero_rational(int magnitude);
  /// True with probability num/den.
  bool chance(int num, int den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace veronese
