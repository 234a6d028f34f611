#include "veronese/germ.hpp"

#include <algorithm>
#include <utility>

#include "veronese/errors.hpp"
#include "veronese/linalg.hpp"
#include "veronese/random.hpp"

namespace veronese {

int default_trunc(int q) { return std::max(q + 4, 2 * q + 2); }

namespace {

void require_vanishing_components(int n, int trunc, const std::vector<MJet>& comps) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    if (c.nvars() != n || c.trunc() != trunc) {
      throw domain_error("component " + std::to_string(i) + " does not share (n, trunc) = (" + std::to_string(n) +
                         ", " + std::to_string(trunc) + ")");
    }
    if (sgn(c.constant_term()) != 0) {
      throw domain_error("component " + std::to_string(i) + " does not vanish at the origin");
    }
  }
}

std::vector<MJet> pull_back(std::span<const MJet> comps, std::span<const MJet> psi) {
  const Substitution sub(std::vector<MJet>(psi.begin(), psi.end()));
  if (!sub.has_invertible_linear_part()) throw domain_error("reparametrization has a singular linear part");
  std::vector<MJet> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(sub.apply(c));
  return out;
}

}  // namespace

RawGerm::RawGerm(int n, int trunc, std::vector<MJet> components)
    : n_(n), trunc_(trunc), components_(std::move(components)) {
  if (n < 1) throw domain_error("germ needs at least one parameter");
  require_vanishing_components(n, trunc, components_);
}

Germ::Germ(int n, int q, int trunc, std::vector<MJet> components)
    : n_(n), q_(q), trunc_(trunc), components_(std::move(components)) {
  if (n < 1 || q < 1) throw domain_error("germ needs n >= 1 and q >= 1");
  if (trunc < q + 3) {
    throw domain_error("truncation " + std::to_string(trunc) + " is below q + 3 = " + std::to_string(q + 3));
  }
  const int dim = ambient_dimension(n, q);
  if (static_cast<int>(components_.size()) != dim) {
    throw domain_error("germ has " + std::to_string(components_.size()) + " components, expected N = " +
                       std::to_string(dim));
  }
  require_vanishing_components(n, trunc, components_);
}

const MJet& Germ::component(const MultiIndex& alpha) const {
  return components_[static_cast<std::size_t>(canonical_index(alpha, n_, q_))];
}

MJet Germ::residual(const MultiIndex& alpha) const {
  return component(alpha) - MJet::monomial(n_, trunc_, alpha);
}

CurveJet::CurveJet(int trunc, std::vector<UJet> components) : trunc_(trunc), components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.trunc() != trunc) throw domain_error("curve components must share the truncation");
    if (sgn(c[0]) != 0) throw domain_error("curve component does not vanish at 0");
  }
}

Germ veronese(int n, int q, int trunc) {
  if (trunc < q + 3) {
    throw domain_error("veronese: truncation " + std::to_string(trunc) + " is below q + 3 = " + std::to_string(q + 3));
  }
  std::vector<MJet> comps;
  for (const auto& alpha : coordinate_indices(n, q)) comps.push_back(MJet::monomial(n, trunc, alpha));
  return Germ(n, q, trunc, std::move(comps));
}

Germ reparametrize(const Germ& g, std::span<const MJet> psi) {
  return Germ(g.nvars(), g.order(), g.trunc(), pull_back(g.components(), psi));
}

RawGerm reparametrize(const RawGerm& g, std::span<const MJet> psi) {
  return RawGerm(g.nvars(), g.trunc(), pull_back(g.components(), psi));
}

Germ apply_homography(const Homography& h, const Germ& g) {
  return Germ(g.nvars(), g.order(), g.trunc(), apply_homography(h, g.components()));
}

RawGerm apply_homography(const Homography& h, const RawGerm& g) {
  return RawGerm(g.nvars(), g.trunc(), apply_homography(h, g.components()));
}

int osculating_dimension(std::span<const MJet> components, int k) {
  if (components.empty()) return 0;
  const auto& table = components.front().table();
  if (k < 1 || k > table.trunc()) {
    throw domain_error("osculating order " + std::to_string(k) + " outside 1.." + std::to_string(table.trunc()));
  }
  std::vector<std::vector<Rational>> rows;
  for (int slot = table.degree_begin(1); slot < table.degree_begin(k + 1); ++slot) {
    std::vector<Rational> row;
    row.reserve(components.size());
    for (const auto& c : components) row.push_back(c.dense()[static_cast<std::size_t>(slot)]);
    rows.push_back(std::move(row));
  }
  return exact_rank(rows);
}

bool is_q_regular(std::span<const MJet> components, int q) {
  if (components.empty()) return false;
  const int n = components.front().nvars();
  return osculating_dimension(components, q) == ambient_dimension(n, q);
}

RawGerm project_drop(const Germ& g, const MultiIndex& alpha) {
  const int drop = canonical_index(alpha, g.nvars(), g.order());
  std::vector<MJet> comps;
  for (int i = 0; i < g.size(); ++i) {
    if (i != drop) comps.push_back(g[i]);
  }
  return RawGerm(g.nvars(), g.trunc(), std::move(comps));
}

CurveJet line_curve(const Germ& g, std::span<const Rational> sigma) {
  if (std::all_of(sigma.begin(), sigma.end(), [](const Rational& x) { return sgn(x) == 0; })) {
    throw domain_error("line_curve: direction must be nonzero");
  }
  std::vector<UJet> comps;
  for (const auto& c : g.components()) comps.push_back(substitute_line(c, sigma));
  return CurveJet(g.trunc(), std::move(comps));
}

int curve_span_rank(const CurveJet& c, int mu_max) {
  if (mu_max > c.trunc()) throw domain_error("curve_span_rank: order exceeds the curve truncation");
  std::vector<std::vector<Rational>> rows;
  for (int mu = 1; mu <= mu_max; ++mu) {
    std::vector<Rational> row;
    for (const auto& comp : c.components()) row.push_back(comp[mu]);
    rows.push_back(std::move(row));
  }
  return exact_rank(rows);
}

Germ make_family_germ(int n, int q, int trunc, const std::map<int, MJet>& r) {
  const Germ base = veronese(n, q, trunc);
  std::map<int, MJet> factors;
  for (const auto& [k, rk] : r) {
    if (k == 1) continue;  // R_1 is forced to zero
    if (k < 2 || k > q) throw domain_error("family factor R_" + std::to_string(k) + " has no weight in 2..q");
    if (rk.nvars() != n || rk.trunc() != trunc) {
      throw domain_error("family factor R_" + std::to_string(k) + " has the wrong shape");
    }
    const int min_deg = q + 3 - k;
    if (rk.order() < min_deg) {
      throw domain_error("family factor R_" + std::to_string(k) + " has a term of degree " +
                         std::to_string(rk.order()) + " < q + 3 - k = " + std::to_string(min_deg));
    }
    factors.emplace(k, rk);
  }
  std::vector<MJet> comps;
  for (const auto& alpha : base.indices()) {
    const MJet mono = MJet::monomial(n, trunc, alpha);
    auto it = factors.find(alpha.weight());
    comps.push_back(it == factors.end() ? mono : mono + mono * it->second);
  }
  return Germ(n, q, trunc, std::move(comps));
}

std::optional<std::map<int, MJet>> check_family_pattern(const Germ& g) {
  const int n = g.nvars();
  const int trunc = g.trunc();
  for (int i = 0; i < n; ++i) {
    if (g[i] != MJet::variable(n, trunc, i)) return std::nullopt;
  }
  std::map<int, MJet> out;
  const auto& table = g[0].table();
  for (int k = 2; k <= g.order(); ++k) {
    const auto pivot = MultiIndex::pivot(n, k);
    const MJet res = g.residual(pivot);
    std::vector<MJet::Term> quotient;
    for (const auto& [beta, c] : res.terms()) {
      if (beta[0] < k) return std::nullopt;
      quotient.emplace_back(beta - pivot, c);
    }
    MJet rk(n, trunc, quotient);
    if (sgn(rk.constant_term()) != 0) return std::nullopt;
    for (const auto& alpha : indices_of_weight(n, k)) {
      // s^alpha R_k, truncated: shift every term of R_k by alpha.
      std::vector<Rational> shifted(static_cast<std::size_t>(table.size()));
      const int a = table.index_of(alpha);
      for (int slot = 0; slot < table.size(); ++slot) {
        const auto& c = rk.dense()[static_cast<std::size_t>(slot)];
        if (sgn(c) == 0) continue;
        const int target = table.product(a, slot);
        if (target >= 0) shifted[static_cast<std::size_t>(target)] = c;
      }
      if (g.residual(alpha) != MJet(n, trunc, std::move(shifted))) return std::nullopt;
    }
    out.emplace(k, std::move(rk));
  }
  return out;
}

std::vector<MJet> random_reparametrization(int n, int trunc, std::uint64_t seed, int magnitude) {
  if (magnitude <= 0) return identity_substitution(n, trunc);
  RationalSampler rng(seed);
  for (;;) {
    RationalMatrix lin(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) lin(i, k) = rng.rational(magnitude);
    if (sgn(determinant(lin)) == 0) continue;
    std::vector<MJet> psi;
    for (int i = 0; i < n; ++i) {
      std::vector<MJet::Term> terms;
      for (int k = 0; k < n; ++k) terms.emplace_back(MultiIndex::unit(n, k), lin(i, k));
      for (int d = 2; d <= std::min(3, trunc); ++d) {
        for (const auto& beta : indices_of_weight(n, d)) {
          if (rng.chance(1, 2)) terms.emplace_back(beta, rng.rational(magnitude));
        }
      }
      psi.emplace_back(n, trunc, terms);
    }
    return psi;
  }
}

Disguise disguise(const Germ& g, std::uint64_t seed, int magnitude) {
  auto h = random_homography(g.nvars(), g.order(), seed, magnitude);
  auto psi = random_reparametrization(g.nvars(), g.trunc(), seed ^ 0x9e3779b97f4a7c15ULL, magnitude);
  Germ out = apply_homography(h, reparametrize(g, psi));
  return Disguise{std::move(out), std::move(h), std::move(psi)};
}

Germ undisguise(const Disguise& d) {
  const Germ straight = apply_homography(homography_inverse(d.homography), d.germ);
  return reparametrize(straight, invert_substitution(d.reparametrization));
}

}  // namespace veronese
