#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "veronese/multi_index.hpp"
#include "veronese/rational.hpp"

namespace veronese {

class UJet;
class HomogeneousPoly;

/// Truncated power series in s_1..s_n over the rationals: every monomial of
/// total degree <= trunc has a slot in a shared graded layout, so two jets with
/// the same (n, trunc) are equal exactly when their coefficient vectors are.
class MJet {
 public:
  using Term = std::pair<MultiIndex, Rational>;

  MJet() = default;
  MJet(int n, int trunc);
  /// Terms of weight > trunc are discarded (they are below the truncation).
  MJet(int n, int trunc, std::span<const Term> terms);
  /// Dense coefficients in MonomialTable order; size must match the table.
  MJet(int n, int trunc, std::vector<Rational> dense);

  static MJet constant(int n, int trunc, const Rational& c);
  /// s_{i+1} (0-based i).
  static MJet variable(int n, int trunc, int i);
  static MJet monomial(int n, int trunc, const MultiIndex& alpha, const Rational& c = 1);

  int nvars() const noexcept { return table_ ? table_->nvars() : 0; }
  int trunc() const noexcept { return table_ ? table_->trunc() : -1; }
  const MonomialTable& table() const { return *table_; }
  const std::shared_ptr<const MonomialTable>& table_ptr() const { return table_; }
  const std::vector<Rational>& dense() const noexcept { return coeffs_; }

  /// Coefficient of s^alpha (zero when |alpha| > trunc).
  const Rational& coeff(const MultiIndex& alpha) const;
  const Rational& constant_term() const { return coeffs_.front(); }
  std::vector<Term> terms() const;
  bool is_zero() const;
  /// Lowest degree carrying a nonzero coefficient; trunc + 1 for the zero jet.
  int order() const;

  /// Same layout with every term of degree > d removed.
  MJet drop_above(int d) const;
  /// Same layout with every term of degree < d removed.
  MJet drop_below(int d) const;
  /// Re-express in a smaller truncation (new_trunc <= trunc).
  MJet truncate(int new_trunc) const;

  std::string to_string() const;

  MJet& operator+=(const MJet& other);
  MJet& operator-=(const MJet& other);
  MJet& operator*=(const Rational& c);

  friend bool operator==(const MJet& a, const MJet& b);
  friend MJet operator+(MJet a, const MJet& b) { return a += b; }
  friend MJet operator-(MJet a, const MJet& b) { return a -= b; }
  friend MJet operator-(MJet a) { return a *= Rational(-1); }
  friend MJet operator*(MJet a, const Rational& c) { return a *= c; }
  friend MJet operator*(const Rational& c, MJet a) { return a *= c; }

 private:
  void require_compatible(const MJet& other) const;

  std::shared_ptr<const MonomialTable> table_;
  std::vector<Rational> coeffs_;
};

/// Truncated product. Throws domain_error on mismatched n or trunc.
MJet mjet_mul(const MJet& a, const MJet& b);
inline MJet operator*(const MJet& a, const MJet& b) { return mjet_mul(a, b); }

/// Multiplicative inverse of a unit; not_a_unit_error if the constant term is zero.
MJet mjet_inverse(const MJet& a);

/// An origin-preserving substitution s_i := psi_i(s), with the monomials of psi
/// precomputed so that many jets can be pulled back at the cost of one
/// linear combination each.
class Substitution {
 public:
  /// Throws domain_error if some psi_i has a nonzero constant term or the
  /// components do not share (n, trunc) with n == psi.size().
  explicit Substitution(std::vector<MJet> psi);

  static Substitution identity(int n, int trunc);

  int nvars() const noexcept { return static_cast<int>(psi_.size()); }
  int trunc() const { return psi_.front().trunc(); }
  const std::vector<MJet>& components() const noexcept { return psi_; }

  /// f(psi(s)), truncated. f must share (n, trunc).
  MJet apply(const MJet& f) const;

  /// Linear part as an n x n row-major matrix: entry (i, k) is d psi_i / d s_k at 0.
  std::vector<Rational> linear_part() const;
  bool has_invertible_linear_part() const;

 private:
  struct Power {
    std::vector<int> slots;
    std::vector<Rational> values;
  };

  std::vector<MJet> psi_;
  std::vector<Power> powers_;  // psi^beta for every slot beta of the table
};

/// f(psi_1(s), ..., psi_n(s)); domain_error when some psi_i(0) != 0.
MJet mjet_compose(const MJet& f, std::span<const MJet> psi);

/// outer(inner(s)) componentwise.
std::vector<MJet> compose_substitutions(std::span<const MJet> outer, std::span<const MJet> inner);

/// The substitution phi with psi(phi(s)) = s up to trunc. Requires psi(0) = 0
/// and an invertible linear part (domain_error otherwise).
std::vector<MJet> invert_substitution(std::span<const MJet> psi);

/// Identity substitution s_i := s_i.
std::vector<MJet> identity_substitution(int n, int trunc);

/// f(sigma t) as a jet in t of the same truncation.
UJet substitute_line(const MJet& f, std::span<const Rational> sigma);

/// Terms of f of total degree exactly d; domain_error if d > trunc or d < 0.
HomogeneousPoly homogeneous_part(const MJet& f, int d);

}  // namespace veronese
