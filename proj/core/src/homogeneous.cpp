#include "veronese/homogeneous.hpp"

#include <sstream>

#include "veronese/errors.hpp"
#include "veronese/mjet.hpp"

namespace veronese {

HomogeneousPoly::HomogeneousPoly(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw domain_error("homogeneous polynomial needs at least one variable");
  if (degree < 0) throw domain_error("homogeneous polynomial degree must be non-negative");
}

HomogeneousPoly::HomogeneousPoly(int n, int degree, TermMap terms) : HomogeneousPoly(n, degree) {
  for (auto& [alpha, c] : terms) {
    if (alpha.size() != n) throw domain_error("exponent length does not match variable count");
    if (alpha.weight() != degree) {
      throw domain_error("term (" + alpha.to_string() + ") has weight " + std::to_string(alpha.weight()) +
                         ", expected " + std::to_string(degree));
    }
    if (sgn(c) != 0) terms_.emplace(alpha, c);
  }
}

HomogeneousPoly HomogeneousPoly::monomial(int n, const MultiIndex& alpha, const Rational& c) {
  HomogeneousPoly out(n, alpha.weight());
  if (sgn(c) != 0) out.terms_.emplace(alpha, c);
  return out;
}

Rational HomogeneousPoly::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

int HomogeneousPoly::s1_degree() const {
  int d = -1;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha[0]);
  return d;
}

HomogeneousPoly HomogeneousPoly::s1_part_at_least(int k) const {
  HomogeneousPoly out(n_, degree_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[0] >= k) out.terms_.emplace(alpha, c);
  }
  return out;
}

HomogeneousPoly HomogeneousPoly::s1_part_at_most(int k) const {
  HomogeneousPoly out(n_, degree_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[0] <= k) out.terms_.emplace(alpha, c);
  }
  return out;
}

Rational HomogeneousPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != n_) throw domain_error("evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& [alpha, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < alpha[i]; ++k) term *= point[static_cast<std::size_t>(i)];
    }
    acc += term;
  }
  return acc;
}

MJet HomogeneousPoly::to_jet(int trunc) const {
  if (degree_ > trunc && !is_zero()) throw domain_error("homogeneous polynomial exceeds jet truncation");
  std::vector<MJet::Term> terms(terms_.begin(), terms_.end());
  return MJet(n_, trunc, terms);
}

std::string HomogeneousPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<MJet::Term> terms(terms_.begin(), terms_.end());
  return MJet(n_, degree_, terms).to_string();
}

void HomogeneousPoly::require_same_shape(const HomogeneousPoly& other) const {
  if (n_ != other.n_ || degree_ != other.degree_) {
    throw domain_error("homogeneous polynomials differ in variable count or degree");
  }
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
  require_same_shape(other);
  for (const auto& [alpha, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& other) { return *this += -other; }

HomogeneousPoly& HomogeneousPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, x] : terms_) x *= c;
  return *this;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.n_ != b.n_) throw domain_error("homogeneous polynomials differ in variable count");
  HomogeneousPoly out(a.n_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out += HomogeneousPoly::monomial(a.n_, ea + eb, ca * cb);
    }
  }
  return out;
}

HomogeneousPoly times_monomial(const HomogeneousPoly& p, const MultiIndex& alpha, const Rational& c) {
  HomogeneousPoly::TermMap terms;
  if (sgn(c) != 0) {
    for (const auto& [e, x] : p.terms()) terms.emplace(e + alpha, x * c);
  }
  return HomogeneousPoly(p.nvars(), p.degree() + alpha.weight(), std::move(terms));
}

std::optional<HomogeneousPoly> monomial_divide(const HomogeneousPoly& p, const MultiIndex& alpha) {
  if (alpha.weight() > p.degree()) {
    if (p.is_zero()) return HomogeneousPoly(p.nvars(), 0);
    return std::nullopt;
  }
  HomogeneousPoly::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    if (!alpha.divides(e)) return std::nullopt;
    terms.emplace(e - alpha, c);
  }
  return HomogeneousPoly(p.nvars(), p.degree() - alpha.weight(), std::move(terms));
}

std::optional<HomogeneousPoly> s1_divide(const HomogeneousPoly& p, int k) {
  if (k < 0) throw domain_error("s1_divide: negative power");
  return monomial_divide(p, MultiIndex::pivot(p.nvars(), k));
}

}  // namespace veronese
