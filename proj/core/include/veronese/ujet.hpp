#pragma once

#include <string>
#include <vector>

#include "veronese/rational.hpp"

namespace veronese {

/// Truncated power series in one variable t: coefficients of t^0..t^trunc.
class UJet {
 public:
  UJet() = default;
  explicit UJet(int trunc);
  /// Pads with zeros or drops coefficients beyond trunc.
  UJet(int trunc, std::vector<Rational> coeffs);

  static UJet variable(int trunc);
  static UJet constant(int trunc, const Rational& c);

  int trunc() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  /// Lowest degree with a nonzero coefficient; trunc + 1 for zero.
  int order() const;

  std::string to_string(const char* var = "t") const;

  UJet& operator+=(const UJet& other);
  UJet& operator-=(const UJet& other);
  UJet& operator*=(const Rational& c);

  friend bool operator==(const UJet&, const UJet&) = default;
  friend UJet operator+(UJet a, const UJet& b) { return a += b; }
  friend UJet operator-(UJet a, const UJet& b) { return a -= b; }
  friend UJet operator-(UJet a) { return a *= Rational(-1); }
  friend UJet operator*(UJet a, const Rational& c) { return a *= c; }
  friend UJet operator*(const Rational& c, UJet a) { return a *= c; }

 private:
  std::vector<Rational> coeffs_;
};

UJet ujet_mul(const UJet& a, const UJet& b);
inline UJet operator*(const UJet& a, const UJet& b) { return ujet_mul(a, b); }

/// Inverse of a unit; not_a_unit_error when a(0) == 0.
UJet ujet_inverse(const UJet& a);

/// f(g(t)) with g(0) = 0 (domain_error otherwise).
UJet ujet_compose(const UJet& f, const UJet& g);

/// Compositional inverse: g with f(g(t)) = t. Requires f(0) = 0 and f'(0) != 0.
UJet ujet_reverse(const UJet& f);

/// Dense univariate polynomial with no trailing zero coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(int degree, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of t^k, zero beyond the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& t) const;
  /// p(a t).
  UPoly scale_argument(const Rational& a) const;
  UJet to_jet(int trunc) const;
  std::string to_string(const char* var = "t") const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const Rational& c);

  friend bool operator==(const UPoly&, const UPoly&) = default;
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q b + r with deg r < deg b. domain_error if b is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace veronese
