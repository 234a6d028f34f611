#include "veronese/mjet.hpp"

#include <algorithm>
#include <sstream>

#include "veronese/errors.hpp"
#include "veronese/homogeneous.hpp"
#include "veronese/linalg.hpp"
#include "veronese/ujet.hpp"

namespace veronese {

namespace {

const Rational kZero{0};

std::vector<int> nonzero_slots(const std::vector<Rational>& c) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

// out += a * b, truncated to the table's order.
void accumulate_product(const MonomialTable& t, const std::vector<Rational>& a, const std::vector<int>& nza,
                        const std::vector<Rational>& b, const std::vector<int>& nzb, std::vector<Rational>& out) {
  Rational tmp;
  for (int i : nza) {
    const int end = t.degree_begin(t.trunc() - t.degree(i) + 1);
    const auto& ai = a[static_cast<std::size_t>(i)];
    for (int j : nzb) {
      if (j >= end) break;
      mpq_mul(tmp.get_mpq_t(), ai.get_mpq_t(), b[static_cast<std::size_t>(j)].get_mpq_t());
      auto& o = out[static_cast<std::size_t>(t.product(i, j))];
      mpq_add(o.get_mpq_t(), o.get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

// out += a * b with a given sparsely as (slots, values).
void accumulate_sparse_product(const MonomialTable& t, const std::vector<int>& slots_a,
                               const std::vector<Rational>& values_a, const std::vector<Rational>& b,
                               const std::vector<int>& nzb, std::vector<Rational>& out) {
  Rational tmp;
  for (std::size_t k = 0; k < slots_a.size(); ++k) {
    const int i = slots_a[k];
    const int end = t.degree_begin(t.trunc() - t.degree(i) + 1);
    for (int j : nzb) {
      if (j >= end) break;
      mpq_mul(tmp.get_mpq_t(), values_a[k].get_mpq_t(), b[static_cast<std::size_t>(j)].get_mpq_t());
      auto& o = out[static_cast<std::size_t>(t.product(i, j))];
      mpq_add(o.get_mpq_t(), o.get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

void append_monomial(std::ostringstream& os, const MultiIndex& e) {
  bool first = true;
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 's' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
  }
}

}  // namespace

MJet::MJet(int n, int trunc)
    : table_(MonomialTable::get(n, trunc)), coeffs_(static_cast<std::size_t>(table_->size())) {}

MJet::MJet(int n, int trunc, std::span<const Term> terms) : MJet(n, trunc) {
  for (const auto& [alpha, c] : terms) {
    const int slot = table_->index_of(alpha);
    if (slot < 0) continue;
    coeffs_[static_cast<std::size_t>(slot)] += c;
  }
}

MJet::MJet(int n, int trunc, std::vector<Rational> dense)
    : table_(MonomialTable::get(n, trunc)), coeffs_(std::move(dense)) {
  if (static_cast<int>(coeffs_.size()) != table_->size()) {
    throw domain_error("dense coefficient vector does not match the monomial layout");
  }
}

MJet MJet::constant(int n, int trunc, const Rational& c) {
  MJet out(n, trunc);
  out.coeffs_[0] = c;
  return out;
}

MJet MJet::variable(int n, int trunc, int i) { return monomial(n, trunc, MultiIndex::unit(n, i)); }

MJet MJet::monomial(int n, int trunc, const MultiIndex& alpha, const Rational& c) {
  MJet out(n, trunc);
  const int slot = out.table_->index_of(alpha);
  if (slot >= 0) out.coeffs_[static_cast<std::size_t>(slot)] = c;
  return out;
}

const Rational& MJet::coeff(const MultiIndex& alpha) const {
  const int slot = table_->index_of(alpha);
  return slot < 0 ? kZero : coeffs_[static_cast<std::size_t>(slot)];
}

std::vector<MJet::Term> MJet::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.emplace_back(table_->exponent(static_cast<int>(i)), coeffs_[i]);
  }
  return out;
}

bool MJet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

int MJet::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return table_->degree(static_cast<int>(i));
  }
  return trunc() + 1;
}

MJet MJet::drop_above(int d) const {
  MJet out(*this);
  for (int i = table_->degree_begin(std::clamp(d + 1, 0, trunc() + 1)); i < table_->size(); ++i) {
    out.coeffs_[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

MJet MJet::drop_below(int d) const {
  MJet out(*this);
  const int end = table_->degree_begin(std::clamp(d, 0, trunc() + 1));
  for (int i = 0; i < end; ++i) out.coeffs_[static_cast<std::size_t>(i)] = 0;
  return out;
}

MJet MJet::truncate(int new_trunc) const {
  if (new_trunc > trunc()) throw domain_error("cannot raise the truncation order of a jet");
  auto table = MonomialTable::get(nvars(), new_trunc);
  std::vector<Rational> dense(coeffs_.begin(), coeffs_.begin() + table->size());
  return MJet(nvars(), new_trunc, std::move(dense));
}

std::string MJet::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_const = alpha.weight() == 0;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      if (!is_const) os << '*';
    }
    append_monomial(os, alpha);
  }
  return first ? "0" : os.str();
}

void MJet::require_compatible(const MJet& other) const {
  if (nvars() != other.nvars() || trunc() != other.trunc()) {
    throw domain_error("jets differ in variable count or truncation (" + std::to_string(nvars()) + "," +
                       std::to_string(trunc()) + ") vs (" + std::to_string(other.nvars()) + "," +
                       std::to_string(other.trunc()) + ")");
  }
}

MJet& MJet::operator+=(const MJet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

MJet& MJet::operator-=(const MJet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

MJet& MJet::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const MJet& a, const MJet& b) {
  return a.nvars() == b.nvars() && a.trunc() == b.trunc() && a.coeffs_ == b.coeffs_;
}

MJet mjet_mul(const MJet& a, const MJet& b) {
  if (a.nvars() != b.nvars() || a.trunc() != b.trunc()) {
    throw domain_error("mjet_mul: operands differ in variable count or truncation");
  }
  std::vector<Rational> out(a.dense().size());
  accumulate_product(a.table(), a.dense(), nonzero_slots(a.dense()), b.dense(), nonzero_slots(b.dense()), out);
  return MJet(a.nvars(), a.trunc(), std::move(out));
}

MJet mjet_inverse(const MJet& a) {
  const Rational& a0 = a.constant_term();
  if (sgn(a0) == 0) throw not_a_unit_error("mjet_inverse: constant term is zero");
  // a = a0 (1 - w), so a^{-1} = a0^{-1} (1 + w + w^2 + ...); Horner in w.
  const Rational inv0 = 1 / a0;
  MJet w = a * (-inv0);
  w = w.drop_below(1);
  const MJet one = MJet::constant(a.nvars(), a.trunc(), 1);
  MJet acc = one;
  for (int k = 0; k < a.trunc(); ++k) acc = one + w * acc;
  return acc * inv0;
}

Substitution::Substitution(std::vector<MJet> psi) : psi_(std::move(psi)) {
  if (psi_.empty()) throw domain_error("substitution needs at least one component");
  const int n = static_cast<int>(psi_.size());
  const int trunc = psi_.front().trunc();
  for (const auto& p : psi_) {
    if (p.nvars() != n || p.trunc() != trunc) {
      throw domain_error("substitution components must be jets in " + std::to_string(n) +
                         " variables sharing one truncation");
    }
    if (sgn(p.constant_term()) != 0) {
      throw domain_error("substitution component has a nonzero constant term");
    }
  }
  const auto& table = psi_.front().table();
  std::vector<std::vector<int>> psi_nz;
  for (const auto& p : psi_) psi_nz.push_back(nonzero_slots(p.dense()));

  powers_.resize(static_cast<std::size_t>(table.size()));
  powers_[0].slots = {0};
  powers_[0].values = {Rational(1)};
  std::vector<Rational> scratch;
  for (int slot = 1; slot < table.size(); ++slot) {
    const auto& e = table.exponent(slot);
    int v = 0;
    while (e[v] == 0) ++v;
    const int parent = table.index_of(e - MultiIndex::unit(n, v));
    const auto& par = powers_[static_cast<std::size_t>(parent)];
    scratch.assign(static_cast<std::size_t>(table.size()), Rational(0));
    accumulate_sparse_product(table, par.slots, par.values, psi_[static_cast<std::size_t>(v)].dense(),
                              psi_nz[static_cast<std::size_t>(v)], scratch);
    auto& pw = powers_[static_cast<std::size_t>(slot)];
    for (std::size_t k = 0; k < scratch.size(); ++k) {
      if (sgn(scratch[k]) != 0) {
        pw.slots.push_back(static_cast<int>(k));
        pw.values.push_back(std::move(scratch[k]));
      }
    }
  }
}

Substitution Substitution::identity(int n, int trunc) { return Substitution(identity_substitution(n, trunc)); }

MJet Substitution::apply(const MJet& f) const {
  if (f.nvars() != nvars() || f.trunc() != trunc()) {
    throw domain_error("substitution: jet shape does not match the substitution");
  }
  std::vector<Rational> out(f.dense().size());
  Rational tmp;
  for (std::size_t slot = 0; slot < f.dense().size(); ++slot) {
    const auto& c = f.dense()[slot];
    if (sgn(c) == 0) continue;
    const auto& pw = powers_[slot];
    for (std::size_t k = 0; k < pw.slots.size(); ++k) {
      mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), pw.values[k].get_mpq_t());
      auto& o = out[static_cast<std::size_t>(pw.slots[k])];
      mpq_add(o.get_mpq_t(), o.get_mpq_t(), tmp.get_mpq_t());
    }
  }
  return MJet(f.nvars(), f.trunc(), std::move(out));
}

std::vector<Rational> Substitution::linear_part() const {
  const int n = nvars();
  std::vector<Rational> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      out[static_cast<std::size_t>(i * n + k)] = psi_[static_cast<std::size_t>(i)].coeff(MultiIndex::unit(n, k));
    }
  }
  return out;
}

bool Substitution::has_invertible_linear_part() const {
  const int n = nvars();
  const auto lin = linear_part();
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = lin[static_cast<std::size_t>(i * n + k)];
  return sgn(determinant(m)) != 0;
}

MJet mjet_compose(const MJet& f, std::span<const MJet> psi) {
  if (static_cast<int>(psi.size()) != f.nvars()) {
    throw domain_error("mjet_compose: need one substitution component per variable");
  }
  return Substitution(std::vector<MJet>(psi.begin(), psi.end())).apply(f);
}

std::vector<MJet> compose_substitutions(std::span<const MJet> outer, std::span<const MJet> inner) {
  const Substitution sub(std::vector<MJet>(inner.begin(), inner.end()));
  std::vector<MJet> out;
  out.reserve(outer.size());
  for (const auto& f : outer) out.push_back(sub.apply(f));
  return out;
}

std::vector<MJet> identity_substitution(int n, int trunc) {
  std::vector<MJet> out;
  for (int i = 0; i < n; ++i) out.push_back(MJet::variable(n, trunc, i));
  return out;
}

std::vector<MJet> invert_substitution(std::span<const MJet> psi) {
  const Substitution check(std::vector<MJet>(psi.begin(), psi.end()));
  const int n = check.nvars();
  const int trunc = check.trunc();
  const auto lin = check.linear_part();
  RationalMatrix l(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) l(i, k) = lin[static_cast<std::size_t>(i * n + k)];
  const auto linv = inverse(l);
  if (!linv) throw domain_error("invert_substitution: linear part is singular");

  // psi = L s + N(s). Fixed point phi = L^{-1} (s - N(phi)); each pass fixes one more degree.
  std::vector<MJet> nonlinear;
  for (const auto& p : psi) nonlinear.push_back(p.drop_below(2));
  const auto ident = identity_substitution(n, trunc);
  auto apply_linv = [&](const std::vector<MJet>& v) {
    std::vector<MJet> out;
    for (int i = 0; i < n; ++i) {
      MJet acc(n, trunc);
      for (int k = 0; k < n; ++k) {
        const auto& c = (*linv)(i, k);
        if (sgn(c) != 0) acc += v[static_cast<std::size_t>(k)] * c;
      }
      out.push_back(std::move(acc));
    }
    return out;
  };
  std::vector<MJet> phi = apply_linv(ident);
  for (int pass = 1; pass < trunc; ++pass) {
    const auto n_of_phi = compose_substitutions(nonlinear, phi);
    std::vector<MJet> rhs;
    for (int i = 0; i < n; ++i) rhs.push_back(ident[static_cast<std::size_t>(i)] - n_of_phi[static_cast<std::size_t>(i)]);
    phi = apply_linv(rhs);
  }
  return phi;
}

UJet substitute_line(const MJet& f, std::span<const Rational> sigma) {
  const int n = f.nvars();
  if (static_cast<int>(sigma.size()) != n) throw domain_error("substitute_line: direction has wrong length");
  const int trunc = f.trunc();
  // powers[i][k] = sigma_i^k
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& p = powers[static_cast<std::size_t>(i)];
    p.resize(static_cast<std::size_t>(trunc + 1));
    p[0] = 1;
    for (int k = 1; k <= trunc; ++k) p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * sigma[static_cast<std::size_t>(i)];
  }
  std::vector<Rational> out(static_cast<std::size_t>(trunc + 1));
  const auto& table = f.table();
  for (int slot = 0; slot < table.size(); ++slot) {
    const auto& c = f.dense()[static_cast<std::size_t>(slot)];
    if (sgn(c) == 0) continue;
    const auto& e = table.exponent(slot);
    Rational term = c;
    for (int i = 0; i < n; ++i) term *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[i])];
    out[static_cast<std::size_t>(table.degree(slot))] += term;
  }
  return UJet(trunc, std::move(out));
}

HomogeneousPoly homogeneous_part(const MJet& f, int d) {
  if (d < 0 || d > f.trunc()) {
    throw domain_error("homogeneous_part: degree " + std::to_string(d) + " is beyond truncation " +
                       std::to_string(f.trunc()));
  }
  HomogeneousPoly::TermMap terms;
  const auto& table = f.table();
  for (int slot = table.degree_begin(d); slot < table.degree_begin(d + 1); ++slot) {
    const auto& c = f.dense()[static_cast<std::size_t>(slot)];
    if (sgn(c) != 0) terms.emplace(table.exponent(slot), c);
  }
  return HomogeneousPoly(f.nvars(), d, std::move(terms));
}

}  // namespace veronese
