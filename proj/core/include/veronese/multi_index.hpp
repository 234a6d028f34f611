#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace veronese {

/// Exponent vector (alpha_1, ..., alpha_n). The weight |alpha| is always recomputed.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  /// alpha = 0 in n variables.
  static MultiIndex zero(int n);
  /// e_i (0-based i).
  static MultiIndex unit(int n, int i);
  /// The pivot index (kappa) = (kappa, 0, ..., 0).
  static MultiIndex pivot(int n, int kappa);
  /// The pivot index (kappa-1; j) = (kappa-1, 0, .., 1 at slot j, .., 0), j 0-based and >= 1.
  static MultiIndex pivot(int n, int kappa, int j);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int weight() const noexcept;
  const std::vector<int>& entries() const noexcept { return entries_; }

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; throws domain_error if any entry would go negative.
  MultiIndex operator-(const MultiIndex& other) const;
  bool divides(const MultiIndex& other) const;

  /// "a1,a2,...,an"
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Graded order: increasing weight, then lexicographic with s_1 greatest.
/// Returns true when a precedes b.
bool graded_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return graded_less(a, b); }
};

/// Binomial coefficient C(a, b) for small arguments.
std::int64_t binomial(int a, int b);

/// N = C(n+q, n) - 1: number of coordinates x_alpha with 1 <= |alpha| <= q.
int ambient_dimension(int n, int q);

/// Position of alpha in the coordinate order of x = (x_alpha), 1 <= |alpha| <= q.
int canonical_index(const MultiIndex& alpha, int n, int q);

/// All alpha with 1 <= |alpha| <= q in coordinate order.
std::vector<MultiIndex> coordinate_indices(int n, int q);

/// All alpha with |alpha| = d, in graded order.
std::vector<MultiIndex> indices_of_weight(int n, int d);

/// Shared layout of all monomials in n variables of degree <= trunc, in graded
/// order (constant first). Index 1 + canonical_index(alpha) is the slot of
/// s^alpha. Includes a product table so truncated multiplication is a lookup.
class MonomialTable {
 public:
  static std::shared_ptr<const MonomialTable> get(int n, int trunc);

  int nvars() const noexcept { return n_; }
  int trunc() const noexcept { return trunc_; }
  int size() const noexcept { return static_cast<int>(exps_.size()); }
  const MultiIndex& exponent(int idx) const { return exps_[static_cast<std::size_t>(idx)]; }
  int degree(int idx) const { return degrees_[static_cast<std::size_t>(idx)]; }
  /// First slot of degree d; degree_begin(trunc + 1) == size().
  int degree_begin(int d) const { return offsets_[static_cast<std::size_t>(d)]; }
  /// Slot of an exponent; -1 when its weight exceeds trunc.
  int index_of(const MultiIndex& alpha) const;
  /// Slot of exps[i] + exps[j]; -1 when the degree exceeds trunc.
  int product(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * exps_.size() + static_cast<std::size_t>(j)];
  }

  MonomialTable(int n, int trunc);

 private:
  int n_;
  int trunc_;
  std::vector<MultiIndex> exps_;
  std::vector<int> degrees_;
  std::vector<int> offsets_;
  std::vector<std::int32_t> products_;
};

}  // namespace veronese
