#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veronese/rational.hpp"

namespace veronese {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Rational& operator()(int i, int j) { return data_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }
  std::span<const Rational> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_),
            static_cast<std::size_t>(cols_)};
  }
  std::vector<std::vector<Rational>> to_rows() const;

  bool is_identity() const;
  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// y = A x.
std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x);
/// y = x^T A (row vector times matrix).
std::vector<Rational> multiply(std::span<const Rational> x, const RationalMatrix& a);

/// Rank over Q of a list of equal-length rows, by fraction-free (Bareiss)
/// elimination on the integer matrix obtained by clearing row denominators.
int exact_rank(std::span<const std::vector<Rational>> rows);
int exact_rank(const RationalMatrix& m);

/// Determinant by Bareiss elimination; domain_error unless square.
Rational determinant(const RationalMatrix& m);

/// Inverse, or nullopt when singular; domain_error unless square.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Result of solving A x = b exactly.
struct LinearSolution {
  bool consistent = false;
  /// One solution (free variables set to zero) when consistent.
  std::vector<Rational> x;
  /// Dimension of the solution space (cols - rank).
  int nullity = 0;
};

LinearSolution solve_linear(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace veronese
