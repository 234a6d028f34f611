#include "veronese/homography.hpp"

#include <utility>

#include "veronese/errors.hpp"
#include "veronese/multi_index.hpp"
#include "veronese/random.hpp"

namespace veronese {

Homography::Homography(RationalMatrix a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != a_.cols()) throw domain_error("homography matrix must be square");
  if (static_cast<int>(b_.size()) != a_.rows()) throw domain_error("homography vector has the wrong length");
  if (sgn(determinant(a_)) == 0) throw domain_error("homography matrix is singular");
}

Homography Homography::identity(int dim) {
  return Homography(RationalMatrix::identity(dim), std::vector<Rational>(static_cast<std::size_t>(dim)));
}

Homography Homography::linear(RationalMatrix a) {
  const auto dim = static_cast<std::size_t>(a.rows());
  return Homography(std::move(a), std::vector<Rational>(dim));
}

Homography Homography::projective(std::vector<Rational> b) {
  const int dim = static_cast<int>(b.size());
  return Homography(RationalMatrix::identity(dim), std::move(b));
}

bool Homography::is_identity() const {
  if (!a_.is_identity()) return false;
  for (const auto& x : b_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::vector<Rational> Homography::map_point(std::span<const Rational> x) const {
  Rational denom = 1;
  for (std::size_t i = 0; i < b_.size(); ++i) denom += b_[i] * x[i];
  if (sgn(denom) == 0) throw domain_error("point is sent to the hyperplane at infinity");
  auto y = multiply(a_, x);
  for (auto& v : y) v /= denom;
  return y;
}

Homography homography_compose(const Homography& h2, const Homography& h1) {
  if (h2.dim() != h1.dim()) throw domain_error("homography_compose: dimension mismatch");
  // [[1, b2], [0, A2]] [[1, b1], [0, A1]] = [[1, b1 + b2 A1], [0, A2 A1]]
  auto b = multiply(std::span<const Rational>(h2.b()), h1.a());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += h1.b()[i];
  return Homography(h2.a() * h1.a(), std::move(b));
}

Homography homography_inverse(const Homography& h) {
  auto ainv = inverse(h.a());
  if (!ainv) throw domain_error("homography_inverse: singular matrix");
  auto b = multiply(std::span<const Rational>(h.b()), *ainv);
  for (auto& x : b) x = -x;
  return Homography(std::move(*ainv), std::move(b));
}

std::vector<MJet> apply_homography(const Homography& h, std::span<const MJet> components) {
  if (static_cast<int>(components.size()) != h.dim()) {
    throw domain_error("apply_homography: germ has " + std::to_string(components.size()) +
                       " components, homography acts on " + std::to_string(h.dim()));
  }
  if (components.empty()) return {};
  const int n = components.front().nvars();
  const int trunc = components.front().trunc();
  for (const auto& c : components) {
    if (sgn(c.constant_term()) != 0) throw domain_error("apply_homography: component does not vanish at 0");
  }
  bool affine = true;
  MJet denom = MJet::constant(n, trunc, 1);
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (sgn(h.b()[i]) == 0) continue;
    affine = false;
    denom += components[i] * h.b()[i];
  }
  std::vector<MJet> out;
  out.reserve(components.size());
  const MJet inv = affine ? denom : mjet_inverse(denom);
  for (int i = 0; i < h.dim(); ++i) {
    MJet acc(n, trunc);
    for (int j = 0; j < h.dim(); ++j) {
      const auto& c = h.a()(i, j);
      if (sgn(c) != 0) acc += components[static_cast<std::size_t>(j)] * c;
    }
    out.push_back(affine ? std::move(acc) : acc * inv);
  }
  return out;
}

Homography random_homography(int n, int q, std::uint64_t seed, int magnitude) {
  const int dim = ambient_dimension(n, q);
  if (magnitude <= 0) return Homography::identity(dim);
  RationalSampler rng(seed);
  for (;;) {
    RationalMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = rng.rational(magnitude);
    std::vector<Rational> b(static_cast<std::size_t>(dim));
    for (auto& x : b) x = rng.rational(magnitude);
    if (sgn(determinant(a)) != 0) return Homography(std::move(a), std::move(b));
  }
}

}  // namespace veronese
