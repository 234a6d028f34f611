#include "veronese/rnc.hpp"

#include <utility>

#include "veronese/errors.hpp"
#include "veronese/linalg.hpp"

namespace veronese {

RncPoly::RncPoly(int q, std::vector<UPoly> polys) : q_(q), polys_(std::move(polys)) {
  if (q < 1) throw domain_error("rational curve degree bound must be >= 1");
  if (polys_.size() < 2) throw domain_error("rational curve needs at least X_0 and X_1");
  for (std::size_t j = 0; j < polys_.size(); ++j) {
    if (polys_[j].degree() > q) {
      throw domain_error("X_" + std::to_string(j) + " has degree " + std::to_string(polys_[j].degree()) +
                         " > " + std::to_string(q));
    }
  }
  if (polys_.front().is_zero()) throw domain_error("X_0 is identically zero");
}

RncPoly RncPoly::moment_curve(int q) {
  std::vector<UPoly> polys;
  for (int j = 0; j <= q; ++j) polys.push_back(UPoly::monomial(j));
  return RncPoly(q, std::move(polys));
}

RncPoly RncPoly::rescaled(const Rational& lambda) const {
  if (sgn(lambda) == 0) throw domain_error("rescaling by zero");
  std::vector<UPoly> out;
  for (const auto& p : polys_) out.push_back(p * lambda);
  return RncPoly(q_, std::move(out));
}

RncPoly RncPoly::scaled_parameter(const Rational& a) const {
  if (sgn(a) == 0) throw domain_error("parameter scaling by zero");
  std::vector<UPoly> out;
  for (const auto& p : polys_) out.push_back(p.scale_argument(a));
  return RncPoly(q_, std::move(out));
}

RncPoly RncPoly::mobius(const Rational& b) const {
  const UPoly lin(std::vector<Rational>{Rational(1), b});
  std::vector<UPoly> lin_pow{UPoly(std::vector<Rational>{Rational(1)})};
  for (int k = 1; k <= q_; ++k) lin_pow.push_back(lin_pow.back() * lin);
  std::vector<UPoly> out;
  for (const auto& p : polys_) {
    UPoly acc;
    for (int k = 0; k <= p.degree(); ++k) {
      if (sgn(p.coeff(k)) == 0) continue;
      acc += UPoly::monomial(k, p.coeff(k)) * lin_pow[static_cast<std::size_t>(q_ - k)];
    }
    out.push_back(std::move(acc));
  }
  return RncPoly(q_, std::move(out));
}

RncPoly normalize_param(const RncPoly& c) {
  const Rational x00 = c[0].coeff(0);
  if (sgn(x00) == 0) throw not_in_chart_error("normalize_param: X_0(0) = 0, curve is not in the origin chart");
  if (sgn(c[1].coeff(0)) != 0) throw bad_tangent_error("normalize_param: X_1(0) != 0, curve misses the origin");
  if (sgn(c[1].coeff(1)) == 0) throw bad_tangent_error("normalize_param: X_1'(0) = 0");
  const Rational lambda = 1 / x00;
  const RncPoly scaled = c.rescaled(lambda);
  return scaled.scaled_parameter(1 / scaled[1].coeff(1));
}

CurveJet affine_jets(const RncPoly& c, int trunc) {
  if (sgn(c[0].coeff(0)) == 0) throw not_in_chart_error("affine_jets: X_0(0) = 0");
  const UJet inv0 = ujet_inverse(c[0].to_jet(trunc));
  std::vector<UJet> comps;
  for (int j = 1; j <= c.dim(); ++j) comps.push_back(c[j].to_jet(trunc) * inv0);
  return CurveJet(trunc, std::move(comps));
}

namespace {

// The graph hypothesis: reparametrized by tau = x_1, x_j = tau^j + O(tau^{q+3}).
void require_graph_hypothesis(const RncPoly& c) {
  const int q = c.degree_bound();
  const int trunc = q + 2;
  const CurveJet jets = affine_jets(c, trunc);
  const UJet t_of_tau = ujet_reverse(jets[0]);
  const UJet tau = UJet::variable(trunc);
  UJet tau_pow = tau;
  for (int j = 2; j <= q; ++j) {
    tau_pow = tau_pow * tau;
    const UJet residual = ujet_compose(jets[j - 1], t_of_tau) - tau_pow;
    if (!residual.is_zero()) {
      throw hypothesis_error("rigidity_check: x_" + std::to_string(j) + " - x_1^" + std::to_string(j) +
                             " has a term of order " + std::to_string(residual.order()) + " < q + 3 = " +
                             std::to_string(q + 3));
    }
  }
}

std::vector<Rational> read_corrections(const RncPoly& c, int r) {
  std::vector<Rational> a;
  for (int j = 0; j <= c.dim(); ++j) a.push_back(c[j].coeff(j + r));
  return a;
}

bool matches_profile(const RncPoly& c, int r) {
  // X_j = t^j + O(t^{j+r})
  for (int j = 0; j <= c.dim(); ++j) {
    for (int k = 0; k < j + r && k <= c.degree_bound(); ++k) {
      if (c[j].coeff(k) != (k == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

RigidityCertificate rigidity_check(const RncPoly& c) {
  const int q = c.degree_bound();
  if (c.dim() != q) throw domain_error("rigidity_check expects a curve in P^q (q + 1 polynomials)");
  if (c[0].coeff(0) != 1 || sgn(c[1].coeff(0)) != 0 || c[1].coeff(1) != 1) {
    throw hypothesis_error("rigidity_check: curve is not normalized (X_0 = 1 + O(t), X_1 = t + O(t^2))");
  }
  require_graph_hypothesis(c);
  if (!matches_profile(c, 1)) throw hypothesis_error("rigidity_check: X_j != t^j + O(t^{j+1})");

  RigidityCertificate cert{{}, c, false};
  RncPoly cur = c;
  for (int r = 1; r <= q; ++r) {
    RigidityRound round;
    round.r = r;
    auto a = read_corrections(cur, r);
    if (r == 1 && (sgn(a[1]) != 0 || (q == 1 && sgn(a[0]) != 0))) {
      // The two equation groups leave a_0, a_1 tied by a single relation at
      // r = 1; the projective parameter change t -> t/(1 + b t) removes it.
      const Rational b = q == 1 ? Rational(-a[0]) : Rational(-a[1] / (q - 1));
      cur = cur.mobius(b);
      round.mobius_shift = b;
      a = read_corrections(cur, r);
    }
    for (int j = 1; j <= q; ++j) {
      if (j + r >= q + 1) {
        round.equations.push_back({RigidityEquation::Group::degree_bound, j, a[static_cast<std::size_t>(j)]});
      }
    }
    for (int j = 2; j <= q; ++j) {
      if (j + r <= q + 2) {
        Rational v = a[static_cast<std::size_t>(j)] + (j - 1) * a[0] - j * a[1];
        round.equations.push_back({RigidityEquation::Group::graph_relation, j, v});
      }
    }
    round.a = a;
    cert.rounds.push_back(std::move(round));
    bool all_zero = true;
    for (const auto& x : a) all_zero = all_zero && sgn(x) == 0;
    if (!all_zero || !matches_profile(cur, r + 1)) {
      cert.final_curve = cur;
      cert.rigid = false;
      return cert;
    }
  }
  cert.final_curve = cur;
  cert.rigid = cur == RncPoly::moment_curve(q);
  return cert;
}

std::optional<RncPoly> fit_rnc(const CurveJet& c, int q) {
  const int trunc = c.trunc();
  if (trunc < 2 * q + 2) {
    throw insufficient_order_error("fit_rnc: jet order " + std::to_string(trunc) + " < 2q + 2 = " +
                                   std::to_string(2 * q + 2));
  }
  bool immersed = false;
  for (const auto& comp : c.components()) immersed = immersed || sgn(comp[1]) != 0;
  if (!immersed) throw domain_error("fit_rnc: curve has vanishing velocity at 0");

  // Unknowns c_1..c_q of X_0 = 1 + sum c_i t^i; equations: [t^m](x_j X_0) = 0, m > q.
  const int m_count = trunc - q;
  RationalMatrix a(c.size() * m_count, q);
  std::vector<Rational> rhs(static_cast<std::size_t>(c.size() * m_count));
  for (int j = 0; j < c.size(); ++j) {
    for (int m = q + 1; m <= trunc; ++m) {
      const int row = j * m_count + (m - q - 1);
      for (int i = 1; i <= q; ++i) a(row, i - 1) = c[j][m - i];
      rhs[static_cast<std::size_t>(row)] = -c[j][m];
    }
  }
  const auto sol = solve_linear(a, rhs);
  if (!sol.consistent || sol.nullity != 0) return std::nullopt;

  std::vector<Rational> x0(static_cast<std::size_t>(q + 1));
  x0[0] = 1;
  for (int i = 1; i <= q; ++i) x0[static_cast<std::size_t>(i)] = sol.x[static_cast<std::size_t>(i - 1)];
  std::vector<UPoly> polys{UPoly(x0)};
  for (const auto& comp : c.components()) {
    std::vector<Rational> xj(static_cast<std::size_t>(q + 1));
    for (int k = 0; k <= q; ++k)
      for (int i = 0; i <= k; ++i) xj[static_cast<std::size_t>(k)] += comp[k - i] * x0[static_cast<std::size_t>(i)];
    polys.emplace_back(std::move(xj));
  }

  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    std::vector<Rational> row(static_cast<std::size_t>(q + 1));
    for (int k = 0; k <= q; ++k) row[static_cast<std::size_t>(k)] = p.coeff(k);
    rows.push_back(std::move(row));
  }
  if (exact_rank(rows) != q + 1) return std::nullopt;
  UPoly g;
  for (const auto& p : polys) g = gcd(g, p);
  if (g.degree() != 0) return std::nullopt;
  return RncPoly(q, std::move(polys));
}

}  // namespace veronese
