#include "veronese/linalg.hpp"

#include <utility>

#include "veronese/errors.hpp"

namespace veronese {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw domain_error("matrix dimensions must be non-negative");
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : RationalMatrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
  for (int i = 0; i < rows_; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != cols_) throw domain_error("matrix rows have different lengths");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[static_cast<std::size_t>(j)];
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::vector<Rational>> RationalMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < rows_; ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw domain_error("matrix product dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RationalMatrix operator*(const Rational& c, RationalMatrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != a.cols()) throw domain_error("matrix-vector dimension mismatch");
  std::vector<Rational> y(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[static_cast<std::size_t>(i)] += a(i, j) * x[static_cast<std::size_t>(j)];
  return y;
}

std::vector<Rational> multiply(std::span<const Rational> x, const RationalMatrix& a) {
  if (static_cast<int>(x.size()) != a.rows()) throw domain_error("vector-matrix dimension mismatch");
  std::vector<Rational> y(static_cast<std::size_t>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    if (sgn(x[static_cast<std::size_t>(i)]) == 0) continue;
    for (int j = 0; j < a.cols(); ++j) y[static_cast<std::size_t>(j)] += x[static_cast<std::size_t>(i)] * a(i, j);
  }
  return y;
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scale each row by the lcm of its denominators.
IntegerRows clear_denominators(std::span<const std::vector<Rational>> rows) {
  IntegerRows out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Integer l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ir;
    ir.reserve(r.size());
    for (const auto& x : r) ir.push_back(x.get_num() * (l / x.get_den()));
    out.push_back(std::move(ir));
  }
  return out;
}

// Bareiss fraction-free elimination in place. Returns the rank; when the
// matrix is square and nonsingular, *det_out receives the determinant of the
// (integer) matrix.
int bareiss(IntegerRows& m, Integer* det_out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.front().size());
  Integer prev = 1;
  int sign = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
      sign = -sign;
    }
    const auto& prow = m[static_cast<std::size_t>(rank)];
    const Integer& p = prow[static_cast<std::size_t>(c)];
    for (int i = rank + 1; i < rows; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const Integer f = row[static_cast<std::size_t>(c)];
      for (int j = c + 1; j < cols; ++j) {
        Integer v = p * row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        row[static_cast<std::size_t>(j)] = std::move(v);
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = p;
    ++rank;
  }
  if (det_out) {
    *det_out = (rank == rows && rows == cols) ? Integer(sign) * prev : Integer(0);
    if (rows == 0) *det_out = 1;
  }
  return rank;
}

}  // namespace

int exact_rank(std::span<const std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const auto width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw domain_error("exact_rank: rows have different lengths");
  }
  auto m = clear_denominators(rows);
  return bareiss(m, nullptr);
}

int exact_rank(const RationalMatrix& m) {
  const auto rows = m.to_rows();
  return exact_rank(rows);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("determinant of a non-square matrix");
  const auto rows = m.to_rows();
  Rational scale = 1;
  for (const auto& r : rows) {
    Integer l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale *= Rational(l);
  }
  auto im = clear_denominators(rows);
  Integer det;
  bareiss(im, &det);
  Rational out(det);
  out /= scale;
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("inverse of a non-square matrix");
  const int n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (sgn(a(i, c)) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    const Rational p = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

LinearSolution solve_linear(const RationalMatrix& a, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != a.rows()) throw domain_error("solve_linear: right-hand side has wrong length");
  const int rows = a.rows();
  const int cols = a.cols();
  RationalMatrix aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(aug(i, c)) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j <= cols; ++j) std::swap(aug(pivot, j), aug(r, j));
    }
    const Rational p = aug(r, c);
    for (int j = c; j <= cols; ++j) aug(r, j) /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(aug(i, c)) == 0) continue;
      const Rational f = aug(i, c);
      for (int j = c; j <= cols; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  LinearSolution out;
  out.nullity = cols - r;
  for (int i = r; i < rows; ++i) {
    if (sgn(aug(i, cols)) != 0) return out;
  }
  out.consistent = true;
  out.x.assign(static_cast<std::size_t>(cols), Rational(0));
  for (int k = 0; k < r; ++k) out.x[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(k)])] = aug(k, cols);
  return out;
}

}  // namespace veronese
