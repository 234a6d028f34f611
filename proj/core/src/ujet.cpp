#include "veronese/ujet.hpp"

#include <algorithm>
#include <sstream>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c, int k, const char* var) {
  if (sgn(c) == 0) return;
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  first = false;
  const Rational mag = abs(c);
  if (mag != 1 || k == 0) {
    os << mag.get_str();
    if (k > 0) os << '*';
  }
  if (k >= 1) os << var;
  if (k > 1) os << '^' << k;
}

}  // namespace

UJet::UJet(int trunc) : coeffs_(static_cast<std::size_t>(trunc + 1)) {
  if (trunc < 0) throw domain_error("UJet truncation must be non-negative");
}

UJet::UJet(int trunc, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (trunc < 0) throw domain_error("UJet truncation must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(trunc + 1));
}

UJet UJet::variable(int trunc) {
  UJet out(trunc);
  if (trunc >= 1) out.coeffs_[1] = 1;
  return out;
}

UJet UJet::constant(int trunc, const Rational& c) {
  UJet out(trunc);
  out.coeffs_[0] = c;
  return out;
}

bool UJet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

int UJet::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  }
  return trunc() + 1;
}

std::string UJet::to_string(const char* var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= trunc(); ++k) append_term(os, first, coeffs_[static_cast<std::size_t>(k)], k, var);
  return first ? "0" : os.str();
}

UJet& UJet::operator+=(const UJet& other) {
  if (trunc() != other.trunc()) throw domain_error("UJet truncation mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

UJet& UJet::operator-=(const UJet& other) {
  if (trunc() != other.trunc()) throw domain_error("UJet truncation mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

UJet& UJet::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UJet ujet_mul(const UJet& a, const UJet& b) {
  if (a.trunc() != b.trunc()) throw domain_error("ujet_mul: truncation mismatch");
  const int t = a.trunc();
  std::vector<Rational> out(static_cast<std::size_t>(t + 1));
  for (int i = 0; i <= t; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= t; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return UJet(t, std::move(out));
}

UJet ujet_inverse(const UJet& a) {
  if (sgn(a[0]) == 0) throw not_a_unit_error("ujet_inverse: constant term is zero");
  const int t = a.trunc();
  std::vector<Rational> inv(static_cast<std::size_t>(t + 1));
  inv[0] = 1 / a[0];
  for (int k = 1; k <= t; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += a[i] * inv[static_cast<std::size_t>(k - i)];
    inv[static_cast<std::size_t>(k)] = -acc * inv[0];
  }
  return UJet(t, std::move(inv));
}

UJet ujet_compose(const UJet& f, const UJet& g) {
  if (f.trunc() != g.trunc()) throw domain_error("ujet_compose: truncation mismatch");
  if (sgn(g[0]) != 0) throw domain_error("ujet_compose: inner series must vanish at 0");
  // Horner: f0 + g (f1 + g (f2 + ...)).
  const int t = f.trunc();
  UJet acc = UJet::constant(t, f[t]);
  for (int k = t - 1; k >= 0; --k) acc = UJet::constant(t, f[k]) + g * acc;
  return acc;
}

UJet ujet_reverse(const UJet& f) {
  const int t = f.trunc();
  if (sgn(f[0]) != 0) throw domain_error("ujet_reverse: series must vanish at 0");
  if (t < 1 || sgn(f[1]) == 0) throw domain_error("ujet_reverse: linear coefficient must be nonzero");
  // f = f1 t + N(t); g = (t - N(g)) / f1, one more correct degree per pass.
  std::vector<Rational> nl(f.coeffs());
  nl[1] = 0;
  const UJet nonlinear(t, nl);
  const UJet ident = UJet::variable(t);
  const Rational inv1 = 1 / f[1];
  UJet g = ident * inv1;
  for (int pass = 1; pass < t; ++pass) g = (ident - ujet_compose(nonlinear, g)) * inv1;
  return g;
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::scale_argument(const Rational& a) const {
  std::vector<Rational> out(coeffs_);
  Rational p = 1;
  for (auto& c : out) {
    c *= p;
    p *= a;
  }
  return UPoly(std::move(out));
}

UJet UPoly::to_jet(int trunc) const { return UJet(trunc, coeffs_); }

std::string UPoly::to_string(const char* var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) append_term(os, first, coeffs_[static_cast<std::size_t>(k)], k, var);
  return first ? "0" : os.str();
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  UPoly quot;
  UPoly rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const UPoly step = UPoly::monomial(rem.degree() - b.degree(), rem.leading() / b.leading());
    quot += step;
    rem -= step * b;
  }
  return {quot, rem};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (1 / x.leading());
}

}  // namespace veronese
