#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "veronese/homography.hpp"
#include "veronese/mjet.hpp"
#include "veronese/multi_index.hpp"
#include "veronese/ujet.hpp"

namespace veronese {

/// Default truncation for order q: enough margin past q+3 for the final-form
/// checks and at least 2q+2 for rational-curve fitting of line images.
int default_trunc(int q);

/// Arbitrary parametrization s |-> (x_1(s), ..., x_M(s)) with x_i(0) = 0.
class RawGerm {
 public:
  RawGerm(int n, int trunc, std::vector<MJet> components);

  int nvars() const noexcept { return n_; }
  int trunc() const noexcept { return trunc_; }
  int size() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<MJet>& components() const noexcept { return components_; }
  const MJet& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const RawGerm&, const RawGerm&) = default;

 private:
  int n_;
  int trunc_;
  std::vector<MJet> components_;
};

/// Parametrization with one component per coordinate x_alpha, 1 <= |alpha| <= q,
/// stored in canonical_index order.
class Germ {
 public:
  /// Empty placeholder with no components.
  Germ() = default;
  /// domain_error unless there are exactly N components, all vanishing at 0,
  /// sharing (n, trunc), and trunc >= q + 3.
  Germ(int n, int q, int trunc, std::vector<MJet> components);

  int nvars() const noexcept { return n_; }
  int order() const noexcept { return q_; }
  int trunc() const noexcept { return trunc_; }
  int size() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<MJet>& components() const noexcept { return components_; }
  const MJet& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  const MJet& component(const MultiIndex& alpha) const;
  /// x_alpha - s^alpha.
  MJet residual(const MultiIndex& alpha) const;
  std::vector<MultiIndex> indices() const { return coordinate_indices(n_, q_); }

  RawGerm raw() const { return RawGerm(n_, trunc_, components_); }

  friend bool operator==(const Germ&, const Germ&) = default;

 private:
  int n_ = 0;
  int q_ = 0;
  int trunc_ = 0;
  std::vector<MJet> components_;
};

/// Parametrized curve t |-> (xi_1(t), ..., xi_M(t)) with xi_i(0) = 0.
class CurveJet {
 public:
  CurveJet(int trunc, std::vector<UJet> components);

  int trunc() const noexcept { return trunc_; }
  int size() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<UJet>& components() const noexcept { return components_; }
  const UJet& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const CurveJet&, const CurveJet&) = default;

 private:
  int trunc_;
  std::vector<UJet> components_;
};

/// Standard Veronese germ x_alpha = s^alpha; domain_error when trunc < q + 3.
Germ veronese(int n, int q, int trunc);

/// Componentwise composition with psi; domain_error if psi(0) != 0 or its
/// linear part is singular.
Germ reparametrize(const Germ& g, std::span<const MJet> psi);
RawGerm reparametrize(const RawGerm& g, std::span<const MJet> psi);

Germ apply_homography(const Homography& h, const Germ& g);
RawGerm apply_homography(const Homography& h, const RawGerm& g);

/// Rank of the coefficient matrix whose rows are the monomials s^beta,
/// 1 <= |beta| <= k, and whose columns are the components.
int osculating_dimension(std::span<const MJet> components, int k);
inline int osculating_dimension(const Germ& g, int k) { return osculating_dimension(g.components(), k); }
inline int osculating_dimension(const RawGerm& g, int k) { return osculating_dimension(g.components(), k); }

/// True iff the order-q osculating space has dimension C(n+q, q) - 1.
bool is_q_regular(std::span<const MJet> components, int q);
inline bool is_q_regular(const Germ& g, int q) { return is_q_regular(g.components(), q); }
inline bool is_q_regular(const RawGerm& g, int q) { return is_q_regular(g.components(), q); }

/// Drop coordinate alpha (projection from the coordinate point e_alpha).
RawGerm project_drop(const Germ& g, const MultiIndex& alpha);

/// Image of the line s = sigma t; domain_error when sigma == 0.
CurveJet line_curve(const Germ& g, std::span<const Rational> sigma);

/// Rank of the Taylor coefficient vectors of orders 1..mu_max.
int curve_span_rank(const CurveJet& c, int mu_max);

/// x_alpha = s^alpha (1 + R_{|alpha|}(s)) with R_1 = 0. Each R_k (k >= 2) must
/// have no terms of degree < q + 3 - k (domain_error otherwise).
Germ make_family_germ(int n, int q, int trunc, const std::map<int, MJet>& r);

/// Recovers {R_k} (k = 2..q) when every residual x_alpha - s^alpha equals
/// s^alpha R_{|alpha|} with R_k(0) = 0 common to the weight; nullopt otherwise.
/// Requires the weight-1 components to be exactly s_i (nullopt otherwise).
std::optional<std::map<int, MJet>> check_family_pattern(const Germ& g);

/// Seeded origin-preserving reparametrization with invertible linear part and
/// nonlinear terms up to degree 3; magnitude 0 gives the identity.
std::vector<MJet> random_reparametrization(int n, int trunc, std::uint64_t seed, int magnitude);

struct Disguise {
  Germ germ;
  Homography homography;
  std::vector<MJet> reparametrization;
};

/// apply_homography(h, reparametrize(g, psi)) with seeded h and psi.
Disguise disguise(const Germ& g, std::uint64_t seed, int magnitude);

/// Undo a disguise: reparametrize(apply(h^{-1}, d.germ), psi^{-1}).
Germ undisguise(const Disguise& d);

}  // namespace veronese
