#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Poly from_jet(const veronese::MJet& f) {
  Poly p;
  for (const auto& [alpha, c] : f.terms()) p[alpha.entries()] = c;
  return p;
}

veronese::MJet to_jet(const Poly& p, int n, int trunc) {
  std::vector<veronese::MJet::Term> terms;
  for (const auto& [e, c] : p) terms.emplace_back(veronese::MultiIndex(e), c);
  return veronese::MJet(n, trunc, terms);
}

void add_term(Poly& p, const Exponent& e, const Rational& c) {
  Rational& slot = p[e];
  slot += c;
  if (sgn(slot) == 0) p.erase(e);
}

Poly add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b) add_term(out, e, c);
  return out;
}

Poly scale(const Poly& a, const Rational& c) {
  Poly out;
  if (sgn(c) == 0) return out;
  for (const auto& [e, x] : a) out[e] = x * c;
  return out;
}

Poly mul(const Poly& a, const Poly& b, int trunc) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (degree(e) <= trunc) add_term(out, e, ca * cb);
    }
  }
  return out;
}

Poly constant(int n, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p[Exponent(static_cast<std::size_t>(n), 0)] = c;
  return p;
}

Poly variable(int n, int i) {
  Exponent e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return Poly{{e, Rational(1)}};
}

Poly compose(const Poly& f, const std::vector<Poly>& psi, int n, int trunc) {
  // powers[i][k] = psi_i^k, each built by one more naive product
  std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n), std::vector<Poly>{constant(n, 1)});
  Poly out;
  for (const auto& [e, c] : f) {
    Poly term = constant(n, c);
    for (int i = 0; i < n; ++i) {
      auto& pw = powers[static_cast<std::size_t>(i)];
      const auto k = static_cast<std::size_t>(e[static_cast<std::size_t>(i)]);
      while (pw.size() <= k) pw.push_back(mul(pw.back(), psi[static_cast<std::size_t>(i)], trunc));
      if (k > 0) term = mul(term, pw[k], trunc);
    }
    out = add(out, term);
  }
  return out;
}

Poly inverse(const Poly& u, int n, int trunc) {
  const Exponent zero(static_cast<std::size_t>(n), 0);
  const Rational u0 = u.at(zero);
  // 1/u = (1/u0) * sum_k v^k with v = 1 - u/u0, v(0) = 0.
  const Poly v = add(constant(n, 1), scale(u, -1 / u0));
  Poly sum = constant(n, 1);
  Poly power = constant(n, 1);
  for (int k = 1; k <= trunc; ++k) {
    power = mul(power, v, trunc);
    sum = add(sum, power);
  }
  return scale(sum, 1 / u0);
}

Rational det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Rational prod = 1;
    for (std::size_t i = 0; i < n && sgn(prod) != 0; ++i) prod *= m[i][perm[i]];
    total += (inversions % 2 == 0) ? prod : Rational(-prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

/// Visits every k-subset of {0..n-1} in lexicographic order until f returns true.
template <typename F>
bool any_subset(std::size_t n, std::size_t k, F f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return false;
  for (;;) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int rank_by_minors(const Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    const bool found = any_subset(rows, k, [&](const std::vector<std::size_t>& r) {
      return any_subset(cols, k, [&](const std::vector<std::size_t>& c) {
        Matrix sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        return sgn(det(sub)) != 0;
      });
    });
    if (found) return static_cast<int>(k);
  }
  return 0;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), std::vector<Rational>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Matrix block_matrix(const veronese::Homography& h) {
  const int dim = h.dim();
  Matrix m(static_cast<std::size_t>(dim + 1), std::vector<Rational>(static_cast<std::size_t>(dim + 1)));
  m[0][0] = 1;
  for (int j = 0; j < dim; ++j) m[0][static_cast<std::size_t>(j + 1)] = h.b()[static_cast<std::size_t>(j)];
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = h.a()(i, j);
  return m;
}

std::vector<Poly> apply_homography(const veronese::Homography& h, const std::vector<Poly>& x, int n, int trunc) {
  Poly denom = constant(n, 1);
  for (std::size_t j = 0; j < x.size(); ++j) denom = add(denom, scale(x[j], h.b()[j]));
  const Poly inv = inverse(denom, n, trunc);
  std::vector<Poly> out;
  for (int i = 0; i < h.dim(); ++i) {
    Poly num;
    for (std::size_t j = 0; j < x.size(); ++j) num = add(num, scale(x[j], h.a()(i, static_cast<int>(j))));
    out.push_back(mul(num, inv, trunc));
  }
  return out;
}

bool s1_divisible(const Poly& p, int k) {
  return std::all_of(p.begin(), p.end(), [k](const auto& term) { return term.first.front() >= k; });
}

Rational Corpus::rational(int magnitude) {
  if (magnitude <= 0) return 0;
  std::uniform_int_distribution<int> num(-magnitude, magnitude);
  std::uniform_int_distribution<int> den(1, magnitude);
  Rational x(num(rng_), den(rng_));
  x.canonicalize();
  return x;
}

Rational Corpus::nonzero(int magnitude) {
  for (;;) {
    Rational x = rational(magnitude);
    if (sgn(x) != 0) return x;
  }
}

int Corpus::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

veronese::MJet Corpus::jet(int n, int trunc, int lo, int density, int magnitude) {
  std::vector<veronese::MJet::Term> terms;
  const auto& table = *veronese::MonomialTable::get(n, trunc);
  for (int slot = table.degree_begin(lo); slot < table.size(); ++slot) {
    if (integer(0, 99) < density) terms.emplace_back(table.exponent(slot), rational(magnitude));
  }
  return veronese::MJet(n, trunc, terms);
}

Matrix Corpus::matrix(int rows, int cols, int magnitude, int zero_percent) {
  Matrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (auto& row : m)
    for (auto& x : row) x = integer(0, 99) < zero_percent ? Rational(0) : rational(magnitude);
  return m;
}

}  // namespace oracle
