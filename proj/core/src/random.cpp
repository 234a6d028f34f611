#include "veronese/random.hpp"

#include "veronese/errors.hpp"

namespace veronese {

std::int64_t RationalSampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw domain_error("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational RationalSampler::rational(int magnitude) {
  if (magnitude <= 0) return 0;
  const auto num = integer(-magnitude, magnitude);
  const auto den = integer(1, magnitude);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

Rational RationalSampler::nonzero_rational(int magnitude) {
  if (magnitude <= 0) throw domain_error("nonzero_rational needs magnitude >= 1");
  for (;;) {
    Rational r = rational(magnitude);
    if (sgn(r) != 0) return r;
  }
}

bool RationalSampler::chance(int num, int den) { return integer(0, den - 1) < num; }

}  // namespace veronese
