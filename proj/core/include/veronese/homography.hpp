#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "veronese/linalg.hpp"
#include "veronese/mjet.hpp"
#include "veronese/rational.hpp"

namespace veronese {

/// Homography of P^N fixing the origin, in the affine chart:
///   x  |->  (A x) / (1 + b . x).
/// Equivalently the block matrix [[1, b], [0, A]] acting on (x_0, x).
class Homography {
 public:
  /// The identity of the 0-dimensional chart.
  Homography() = default;
  /// Throws domain_error if A is not square, b has the wrong length, or det A == 0.
  Homography(RationalMatrix a, std::vector<Rational> b);

  static Homography identity(int dim);
  /// (A, 0)
  static Homography linear(RationalMatrix a);
  /// (I, b)
  static Homography projective(std::vector<Rational> b);

  int dim() const noexcept { return a_.rows(); }
  const RationalMatrix& a() const noexcept { return a_; }
  const std::vector<Rational>& b() const noexcept { return b_; }
  bool is_identity() const;

  /// Action on a point of the chart (1 + b.x must be nonzero).
  std::vector<Rational> map_point(std::span<const Rational> x) const;

  friend bool operator==(const Homography&, const Homography&) = default;

 private:
  RationalMatrix a_;
  std::vector<Rational> b_;
};

/// h2 after h1.
Homography homography_compose(const Homography& h2, const Homography& h1);
Homography homography_inverse(const Homography& h);

/// Componentwise (A x)/(1 + b.x) with x the vector of component jets. The
/// components must vanish at 0 so 1 + b.x is a unit.
std::vector<MJet> apply_homography(const Homography& h, std::span<const MJet> components);

/// Seeded homography of dimension N = C(n+q, n) - 1 with entries of size
/// bounded by magnitude; magnitude 0 gives the identity. A is resampled until
/// it is invertible.
Homography random_homography(int n, int q, std::uint64_t seed, int magnitude);

}  // namespace veronese
