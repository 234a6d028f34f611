#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "veronese/multi_index.hpp"
#include "veronese/rational.hpp"

namespace veronese {

class MJet;

/// Homogeneous polynomial of fixed degree in s_1..s_n. The zero polynomial
/// keeps its nominal degree.
class HomogeneousPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLess>;

  HomogeneousPoly() = default;
  HomogeneousPoly(int n, int degree);
  /// domain_error if some exponent has the wrong length or weight. Zero
  /// coefficients are dropped.
  HomogeneousPoly(int n, int degree, TermMap terms);

  static HomogeneousPoly monomial(int n, const MultiIndex& alpha, const Rational& c = 1);

  int nvars() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const MultiIndex& alpha) const;

  /// Largest exponent of s_1 among the terms; -1 for zero.
  int s1_degree() const;
  /// Terms whose s_1 exponent is >= k.
  HomogeneousPoly s1_part_at_least(int k) const;
  /// Terms whose s_1 exponent is <= k.
  HomogeneousPoly s1_part_at_most(int k) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Embed as a jet (requires degree <= trunc).
  MJet to_jet(int trunc) const;
  std::string to_string() const;

  HomogeneousPoly& operator+=(const HomogeneousPoly& other);
  HomogeneousPoly& operator-=(const HomogeneousPoly& other);
  HomogeneousPoly& operator*=(const Rational& c);

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a) { return a *= Rational(-1); }
  friend HomogeneousPoly operator*(HomogeneousPoly a, const Rational& c) { return a *= c; }
  friend HomogeneousPoly operator*(const Rational& c, HomogeneousPoly a) { return a *= c; }
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);

 private:
  void require_same_shape(const HomogeneousPoly& other) const;

  int n_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

/// Multiply by the monomial c * s^alpha.
HomogeneousPoly times_monomial(const HomogeneousPoly& p, const MultiIndex& alpha, const Rational& c = 1);

/// q with s_1^k q = p, or nullopt if s_1^k does not divide p. Zero is divisible by everything.
std::optional<HomogeneousPoly> s1_divide(const HomogeneousPoly& p, int k);

/// Exact quotient by the monomial s^alpha, or nullopt.
std::optional<HomogeneousPoly> monomial_divide(const HomogeneousPoly& p, const MultiIndex& alpha);

}  // namespace veronese
