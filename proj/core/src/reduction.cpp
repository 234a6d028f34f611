#include "veronese/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "veronese/errors.hpp"
#include "veronese/random.hpp"
#include "veronese/rnc.hpp"

namespace veronese {

namespace {

HomogeneousPoly zero_poly(int n, int degree) { return HomogeneousPoly(n, degree); }

MultiIndex s1(int n) { return MultiIndex::unit(n, 0); }

MultiIndex s1_power(int n, int k) { return MultiIndex::pivot(n, k); }

/// P_alpha + s^alpha G + sum_j alpha_j s^alpha / s_j H_j.
HomogeneousPoly updated_layer(const HomogeneousPoly& p, const MultiIndex& alpha, const HomogeneousPoly& g,
                              const std::vector<HomogeneousPoly>& h) {
  HomogeneousPoly out = p + times_monomial(g, alpha);
  for (int j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    out += times_monomial(h[static_cast<std::size_t>(j)], alpha - MultiIndex::unit(alpha.size(), j), alpha[j]);
  }
  return out;
}

/// The parameter corrections H_j for a given G, chosen so that the weight-kappa1
/// pivot layers lose every term of s_1-degree >= kappa1 - 1.
std::vector<HomogeneousPoly> corrections_for(const PGroups& p, const HomogeneousPoly& g, HomogeneousPoly* a_part) {
  const int n = p.n;
  const int kappa = p.kappa1();
  const HomogeneousPoly high = p.at(MultiIndex::pivot(n, kappa)).s1_part_at_least(kappa - 1);
  HomogeneousPoly a = *s1_divide(high, kappa - 1) * Rational(-1, kappa);
  if (a_part != nullptr) *a_part = a;

  std::vector<HomogeneousPoly> h;
  h.reserve(static_cast<std::size_t>(n));
  h.push_back(times_monomial(g, s1(n), Rational(-1, kappa)) + a);
  for (int j = 1; j < n; ++j) {
    const auto pivot_j = MultiIndex::pivot(n, kappa, j);
    HomogeneousPoly e = p.at(pivot_j) + times_monomial(g, pivot_j);
    if (kappa >= 2) e += times_monomial(h.front(), MultiIndex::pivot(n, kappa - 1, j), kappa - 1);
    h.push_back(-*s1_divide(e.s1_part_at_least(kappa - 1), kappa - 1));
  }
  return h;
}

/// Terms of s_1-degree >= kappa2 of the updated weight-kappa2 pivot layer.
HomogeneousPoly pivot2_high_part(const PGroups& p, const HomogeneousPoly& g) {
  const int kappa2 = p.kappa2();
  const auto pivot = MultiIndex::pivot(p.n, kappa2);
  const auto h = corrections_for(p, g, nullptr);
  return updated_layer(p.at(pivot), pivot, g, h).s1_part_at_least(kappa2);
}

struct GSolve {
  HomogeneousPoly g;
  int unknowns = 0;
  int rank = 0;
};

/// G of degree r killing the high part of the weight-kappa2 pivot layer. The
/// map G -> high part is affine, so its matrix is read off from G = 0 and the
/// monomial basis.
GSolve solve_for_g(const PGroups& p) {
  const int n = p.n;
  const int r = p.r;
  const auto basis = indices_of_weight(n, r);
  std::vector<MultiIndex> rows;
  for (const auto& beta : indices_of_weight(n, p.q + 2)) {
    if (beta[0] >= p.kappa2()) rows.push_back(beta);
  }
  const HomogeneousPoly base = pivot2_high_part(p, zero_poly(n, r));
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const HomogeneousPoly image = pivot2_high_part(p, HomogeneousPoly::monomial(n, basis[col])) - base;
    for (std::size_t row = 0; row < rows.size(); ++row) {
      m(static_cast<int>(row), static_cast<int>(col)) = image.coeff(rows[row]);
    }
  }
  std::vector<Rational> rhs;
  rhs.reserve(rows.size());
  for (const auto& beta : rows) rhs.push_back(-base.coeff(beta));

  GSolve out;
  out.unknowns = static_cast<int>(basis.size());
  out.rank = exact_rank(m);
  const auto sol = solve_linear(m, rhs);
  if (!sol.consistent || sol.nullity != 0) {
    throw std::logic_error("projective normalization has no unique solution at r = " + std::to_string(r));
  }
  HomogeneousPoly::TermMap terms;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    if (sgn(sol.x[col]) != 0) terms.emplace(basis[col], sol.x[col]);
  }
  out.g = HomogeneousPoly(n, r, std::move(terms));
  return out;
}

/// C^{-1}, where C holds the coefficients of degree <= q of every component.
RationalMatrix low_order_inverse(const std::vector<MJet>& comps, int n, int q) {
  const auto indices = coordinate_indices(n, q);
  const int dim = static_cast<int>(indices.size());
  RationalMatrix c(dim, dim);
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) c(row, col) = comps[static_cast<std::size_t>(row)].coeff(indices[static_cast<std::size_t>(col)]);
  }
  auto inv = inverse(c);
  if (!inv) throw non_regular_error("germ is not " + std::to_string(q) + "-regular");
  return *std::move(inv);
}

void check_divisibility(Certificate::Identity id, int kappa, int j, HomogeneousPoly poly,
                        std::vector<DivisibilityCheck>& out) {
  const bool divisible = s1_divide(poly, kappa).has_value();
  out.push_back(DivisibilityCheck{id, kappa, j, std::move(poly), divisible});
}

Certificate make_certificate(Certificate::Identity id, const PGroups& p, int kappa, HomogeneousPoly witness,
                             int power) {
  Certificate c;
  c.identity = id;
  c.r = p.r;
  c.kappa = kappa;
  c.witness = std::move(witness);
  c.divisor_power = power;
  return c;
}

const PolyMap& group_of(const PGroups& p, int kappa) { return kappa == p.kappa1() ? p.q1 : p.q2; }

}  // namespace

int profile_min_degree(int q, int r, int w) {
  const int s = w + r;
  if (s <= q + 1) return q + 1;
  if (s == q + 2) return q + 2;
  return q + 3;
}

std::optional<MultiIndex> profile_violation(const Germ& g, int r) {
  for (const auto& alpha : g.indices()) {
    if (g.residual(alpha).order() < profile_min_degree(g.order(), r, alpha.weight())) return alpha;
  }
  return std::nullopt;
}

bool PGroups::all_zero() const {
  for (const auto* group : {&q1, &q2}) {
    for (const auto& [alpha, poly] : *group) {
      if (!poly.is_zero()) return false;
    }
  }
  return true;
}

HomogeneousPoly PGroups::at(const MultiIndex& alpha) const {
  if (auto it = q1.find(alpha); it != q1.end()) return it->second;
  if (auto it = q2.find(alpha); it != q2.end()) return it->second;
  return HomogeneousPoly(n, alpha.weight() + r);
}

std::string identity_name(Certificate::Identity id) {
  switch (id) {
    case Certificate::Identity::distinguished_relation: return "distinguished_relation";
    case Certificate::Identity::pivot_quotient: return "pivot_quotient";
    case Certificate::Identity::cleared_relation: return "cleared_relation";
    case Certificate::Identity::weighted_quotient: return "weighted_quotient";
    case Certificate::Identity::shifted_quotient: return "shifted_quotient";
    case Certificate::Identity::family_pattern: return "family_pattern";
  }
  return "unknown";
}

std::string Certificate::describe() const {
  std::string out = identity_name(identity) + " at r=" + std::to_string(r) + " kappa=" + std::to_string(kappa);
  if (is_divisibility()) {
    if (identity != Identity::distinguished_relation) out += " j=" + std::to_string(j + 1);
    if (alpha) out += " alpha=(" + alpha->to_string() + ")";
    out += ": s1^" + std::to_string(divisor_power) + " does not divide " + witness.to_string();
  } else {
    if (identity == Identity::family_pattern) out += " mu=" + std::to_string(layer);
    if (alpha) out += " alpha=(" + alpha->to_string() + ")";
    out += ": sides differ by " + witness.to_string();
  }
  return out;
}

std::pair<ReducedGerm, Homography> reduce_to_order_1(const RawGerm& raw, int q) {
  const int n = raw.nvars();
  const int dim = ambient_dimension(n, q);
  if (raw.size() != dim) {
    throw non_regular_error("germ has " + std::to_string(raw.size()) + " components, expected N = " +
                            std::to_string(dim));
  }
  auto h = Homography::linear(low_order_inverse(raw.components(), n, q));
  auto comps = apply_homography(h, raw.components());
  return {ReducedGerm{Germ(n, q, raw.trunc(), std::move(comps)), 1}, std::move(h)};
}

PGroups extract_P(const ReducedGerm& g) {
  const Germ& germ = g.germ;
  if (auto bad = profile_violation(germ, g.r)) {
    throw inconsistency_error("coordinate (" + bad->to_string() + ") violates the order-" + std::to_string(g.r) +
                              " profile");
  }
  PGroups p;
  p.n = germ.nvars();
  p.q = germ.order();
  p.r = g.r;
  for (const auto& alpha : germ.indices()) {
    const int s = alpha.weight() + g.r;
    if (s == p.q + 1) p.q1.emplace(alpha, homogeneous_part(germ.residual(alpha), p.q + 1));
    if (s == p.q + 2) p.q2.emplace(alpha, homogeneous_part(germ.residual(alpha), p.q + 2));
  }
  return p;
}

PGroups predicted_layers(const PGroups& p, const HomogeneousPoly& g, const std::vector<HomogeneousPoly>& h) {
  PGroups out = p;
  for (auto* group : {&out.q1, &out.q2}) {
    for (auto& [alpha, poly] : *group) poly = updated_layer(poly, alpha, g, h);
  }
  return out;
}

bool satisfies_pivot_bounds(const PGroups& p) {
  const int n = p.n;
  if (const int kappa = p.kappa1(); kappa > 0) {
    if (p.at(MultiIndex::pivot(n, kappa)).s1_degree() > kappa - 2) return false;
    for (int j = 1; j < n; ++j) {
      if (p.at(MultiIndex::pivot(n, kappa, j)).s1_degree() > kappa - 2) return false;
    }
  }
  if (const int kappa = p.kappa2(); kappa > 0) {
    if (p.at(MultiIndex::pivot(n, kappa)).s1_degree() > kappa - 1) return false;
  }
  return true;
}

NormalizedStage normalize_order_r(const ReducedGerm& g) {
  const Germ& germ = g.germ;
  const int n = germ.nvars();
  const int q = germ.order();
  const int trunc = germ.trunc();
  const int r = g.r;
  if (r < 1 || r > q) throw domain_error("normalization needs 1 <= r <= q, got r = " + std::to_string(r));

  const PGroups p = extract_P(g);
  NormalizationData data;
  data.g = zero_poly(n, r);
  if (r >= 2) {
    auto solved = solve_for_g(p);
    data.g = std::move(solved.g);
    data.g_unknowns = solved.unknowns;
    data.g_rank = solved.rank;
  }
  data.h = corrections_for(p, data.g, &data.a_part);
  if (p.kappa2() > 0) {
    data.b_part = times_monomial(data.a_part, s1_power(n, p.kappa2() - 1), p.kappa2());
  }

  std::vector<Rational> b(static_cast<std::size_t>(germ.size()));
  for (const auto& [beta, c] : data.g.terms()) b[static_cast<std::size_t>(canonical_index(beta, n, q))] = -c;
  const auto projective = Homography::projective(std::move(b));

  std::vector<MJet> psi;
  psi.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) psi.push_back(MJet::variable(n, trunc, j) + data.h[static_cast<std::size_t>(j)].to_jet(trunc));

  const Germ moved = apply_homography(projective, reparametrize(germ, psi));
  data.anodine = low_order_inverse(moved.components(), n, q);
  const auto indices = germ.indices();
  for (std::size_t row = 0; row < indices.size(); ++row) {
    if (indices[row].weight() + r < q + 1) continue;
    for (std::size_t col = 0; col < indices.size(); ++col) {
      if (data.anodine(static_cast<int>(row), static_cast<int>(col)) != (row == col ? 1 : 0)) {
        throw std::logic_error("linear fix touches coordinate (" + indices[row].to_string() + ")");
      }
    }
  }
  const auto fix = Homography::linear(data.anodine);
  Germ out = apply_homography(fix, moved);

  ReducedGerm reduced{std::move(out), r};
  if (auto bad = profile_violation(reduced.germ, r)) {
    throw std::logic_error("normalization broke the order-" + std::to_string(r) + " profile at (" + bad->to_string() +
                           ")");
  }
  if (!satisfies_pivot_bounds(extract_P(reduced))) {
    throw std::logic_error("normalization missed the pivot bounds at r = " + std::to_string(r));
  }
  return NormalizedStage{std::move(reduced), std::move(data), homography_compose(fix, projective), std::move(psi)};
}

HomogeneousPoly cleared_relation(const PGroups& p, const MultiIndex& alpha) {
  const int n = p.n;
  const int kappa = alpha.weight();
  if (kappa != p.kappa1() && kappa != p.kappa2()) {
    throw domain_error("weight " + std::to_string(kappa) + " is not a group weight at r = " + std::to_string(p.r));
  }
  int tail = 0;
  for (int i = 1; i < n; ++i) tail += alpha[i];
  const HomogeneousPoly pivot = p.at(MultiIndex::pivot(n, kappa));
  HomogeneousPoly out = times_monomial(p.at(alpha), s1_power(n, kappa)) - times_monomial(pivot, alpha, 1 - tail);
  for (int i = 1; i < n; ++i) {
    if (alpha[i] == 0) continue;
    const auto shift = alpha - MultiIndex::unit(n, i) + s1(n);
    out -= times_monomial(p.at(MultiIndex::pivot(n, kappa, i)), shift, alpha[i]);
  }
  return out;
}

SolveOutcome solve_distinguished(const PGroups& p) {
  if (!satisfies_pivot_bounds(p)) {
    throw domain_error("pivot layers exceed the s1-degree bounds; normalize before solving");
  }
  const int n = p.n;
  SolveOutcome out;
  std::vector<int> kappas;
  if (p.kappa1() > 0) kappas.push_back(p.kappa1());
  if (p.kappa2() > 0) kappas.push_back(p.kappa2());

  for (const int kappa : kappas) {
    const auto pk = p.at(MultiIndex::pivot(n, kappa));
    for (int j = 1; j < n; ++j) {
      const auto pj = p.at(MultiIndex::pivot(n, kappa, j));
      const auto sj = MultiIndex::unit(n, j);
      check_divisibility(Certificate::Identity::weighted_quotient, kappa, j,
                         times_monomial(pk, sj, 1 - kappa) + times_monomial(pj, s1(n), kappa), out.divisibility);
      check_divisibility(Certificate::Identity::shifted_quotient, kappa, j,
                         times_monomial(pk, sj + s1(n), 2 - kappa) + times_monomial(pj, s1_power(n, 2), kappa - 1),
                         out.divisibility);
    }
  }

  DistinguishedSolution sol;
  sol.a.assign(static_cast<std::size_t>(n), zero_poly(n, p.r + 1));
  bool a_known = false;
  for (const int kappa : kappas) {
    const auto pk = p.at(MultiIndex::pivot(n, kappa));
    for (int j = 1; j < n; ++j) {
      const auto diff = times_monomial(pk, MultiIndex::unit(n, j)) -
                        times_monomial(p.at(MultiIndex::pivot(n, kappa, j)), s1(n));
      auto quotient = s1_divide(diff, kappa);
      if (!quotient) {
        auto cert = make_certificate(Certificate::Identity::pivot_quotient, p, kappa, diff, kappa);
        cert.j = j;
        out.certificate = std::move(cert);
        return out;
      }
      if (!a_known) sol.a[static_cast<std::size_t>(j)] = *std::move(quotient);
    }
    a_known = true;

    auto c = s1_divide(pk, kappa);
    if (!c) {
      auto cert = make_certificate(Certificate::Identity::distinguished_relation, p, kappa, pk, kappa);
      cert.alpha = MultiIndex::pivot(n, kappa);
      out.certificate = std::move(cert);
      return out;
    }
    for (const auto& [alpha, pa] : group_of(p, kappa)) {
      HomogeneousPoly residual = pa - times_monomial(*c, alpha);
      for (int i = 1; i < n; ++i) {
        if (alpha[i] == 0) continue;
        residual += times_monomial(sol.a[static_cast<std::size_t>(i)], alpha - MultiIndex::unit(n, i), alpha[i]);
      }
      if (!residual.is_zero()) {
        auto cert = make_certificate(Certificate::Identity::distinguished_relation, p, kappa, residual, 0);
        cert.alpha = alpha;
        out.certificate = std::move(cert);
        return out;
      }
    }
    sol.c.emplace(kappa, *std::move(c));
  }
  out.solution = std::move(sol);
  return out;
}

StageResult check_vanishing(const ReducedGerm& normalized) {
  StageResult out;
  out.p = extract_P(normalized);
  out.solve = solve_distinguished(out.p);
  for (const auto* group : {&out.p.q1, &out.p.q2}) {
    for (const auto& [alpha, poly] : *group) {
      if (!poly.is_zero()) out.nonzero.push_back(alpha);
    }
  }
  out.germ = normalized;
  if (!out.nonzero.empty()) {
    out.verdict = StageResult::Verdict::fail;
    return out;
  }
  out.verdict = StageResult::Verdict::advance;
  out.germ.r = normalized.r + 1;
  if (auto bad = profile_violation(out.germ.germ, out.germ.r)) {
    throw std::logic_error("vanishing layers did not yield the order-" + std::to_string(out.germ.r) +
                           " profile at (" + bad->to_string() + ")");
  }
  return out;
}

std::pair<Germ, std::vector<MJet>> finalize(const ReducedGerm& g) {
  const Germ& germ = g.germ;
  const int n = germ.nvars();
  const int q = germ.order();
  const int trunc = germ.trunc();
  if (g.r != q + 1) throw domain_error("finalize needs r = q + 1, got r = " + std::to_string(g.r));
  if (auto bad = profile_violation(germ, g.r)) {
    throw inconsistency_error("coordinate (" + bad->to_string() + ") violates the final profile");
  }
  const std::vector<MJet> linear(germ.components().begin(), germ.components().begin() + n);
  auto psi = invert_substitution(linear);
  Germ out = reparametrize(germ, psi);
  for (int i = 0; i < n; ++i) {
    if (out[i] != MJet::variable(n, trunc, i)) {
      throw std::logic_error("weight-1 coordinate " + std::to_string(i + 1) + " kept a correction");
    }
  }
  for (const auto& alpha : out.indices()) {
    if (alpha.weight() >= 2 && out.residual(alpha).order() < q + 3) {
      throw std::logic_error("residual of (" + alpha.to_string() + ") has order below q + 3");
    }
  }
  return {std::move(out), std::move(psi)};
}

bool certificate_is_violated(const Certificate& cert) {
  if (cert.is_divisibility()) return !s1_divide(cert.witness, cert.divisor_power).has_value();
  return !cert.witness.is_zero();
}

std::string to_string(ReductionTrace::Verdict v) {
  switch (v) {
    case ReductionTrace::Verdict::reduced: return "reduced";
    case ReductionTrace::Verdict::not_q_regular: return "not-q-regular";
    case ReductionTrace::Verdict::not_property_p: return "not-property-P";
  }
  return "unknown";
}

ReductionTrace run_pipeline(const RawGerm& raw, int q) {
  ReductionTrace trace;
  trace.n = raw.nvars();
  trace.q = q;
  trace.trunc = raw.trunc();

  std::optional<std::pair<ReducedGerm, Homography>> start;
  try {
    start = reduce_to_order_1(raw, q);
  } catch (const non_regular_error&) {
    trace.verdict = ReductionTrace::Verdict::not_q_regular;
    return trace;
  }
  ReducedGerm current = std::move(start->first);
  trace.order1 = start->second;
  Homography witness = start->second;
  std::vector<MJet> psi_acc = identity_substitution(trace.n, trace.trunc);

  for (int r = 1; r <= q; ++r) {
    StageRecord rec;
    rec.r = r;
    rec.extracted = extract_P(current);
    auto stage = normalize_order_r(current);
    witness = homography_compose(stage.homography, witness);
    psi_acc = compose_substitutions(psi_acc, stage.reparametrization);
    auto result = check_vanishing(stage.germ);

    rec.normalization = std::move(stage.data);
    rec.homography = std::move(stage.homography);
    rec.reparametrization = std::move(stage.reparametrization);
    rec.normalized = std::move(result.p);
    rec.solve = std::move(result.solve);
    rec.verdict = result.verdict;
    rec.germ_after = stage.germ.germ;
    rec.witness_homography = witness;
    rec.witness_reparametrization = psi_acc;
    const bool failed = result.verdict == StageResult::Verdict::fail;
    std::optional<Certificate> cert = rec.solve.certificate;
    trace.stages.push_back(std::move(rec));

    if (failed) {
      trace.verdict = ReductionTrace::Verdict::not_property_p;
      trace.certificate = std::move(cert);
      trace.failed_stage = r;
      trace.final_germ = std::move(stage.germ.germ);
      trace.witness_homography = std::move(witness);
      trace.witness_reparametrization = std::move(psi_acc);
      return trace;
    }
    current = std::move(result.germ);
  }

  auto [final_germ, psi] = finalize(current);
  trace.witness_reparametrization = compose_substitutions(psi_acc, psi);
  trace.final_reparametrization = std::move(psi);
  trace.final_germ = std::move(final_germ);
  trace.witness_homography = std::move(witness);
  trace.verdict = ReductionTrace::Verdict::reduced;
  return trace;
}

bool replay_witness(const RawGerm& input, const Homography& h, const std::vector<MJet>& psi, const Germ& expected) {
  const RawGerm replayed = apply_homography(h, reparametrize(input, psi));
  return replayed.components() == expected.components();
}

std::string to_string(Decision::Verdict v) {
  switch (v) {
    case Decision::Verdict::veronese: return "VERONESE";
    case Decision::Verdict::not_q_regular: return "NOT_Q_REGULAR";
    case Decision::Verdict::not_property_p: return "NOT_PROPERTY_P";
    case Decision::Verdict::property_p_not_veronese: return "PROPERTY_P_NOT_VERONESE";
  }
  return "UNKNOWN";
}

std::vector<std::vector<Rational>> sample_directions(int n, int count, std::uint64_t seed) {
  std::vector<std::vector<Rational>> out;
  if (count <= 0) return out;
  out.emplace_back(static_cast<std::size_t>(n), Rational(1));
  RationalSampler rng(seed);
  // Repeats are skipped; the attempt cap only matters when n is tiny and count large.
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 100 * count; ++attempt) {
    std::vector<Rational> sigma;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      sigma.push_back(rng.rational(4));
      nonzero = nonzero || sgn(sigma.back()) != 0;
    }
    if (nonzero && std::find(out.begin(), out.end(), sigma) == out.end()) out.push_back(std::move(sigma));
  }
  return out;
}

namespace {

/// First layer where Q_{mu,alpha} s_1^k = s^alpha Q_{mu,(k)} fails.
std::optional<Certificate> family_pattern_violation(const Germ& g) {
  const int n = g.nvars();
  for (int k = 2; k <= g.order(); ++k) {
    const auto pivot = MultiIndex::pivot(n, k);
    const MJet pivot_res = g.residual(pivot);
    for (const auto& alpha : indices_of_weight(n, k)) {
      const MJet res = g.residual(alpha);
      for (int mu = 1; mu <= g.trunc(); ++mu) {
        const auto lhs = times_monomial(homogeneous_part(res, mu), s1_power(n, k));
        const auto rhs = times_monomial(homogeneous_part(pivot_res, mu), alpha);
        if (lhs == rhs) continue;
        Certificate c;
        c.identity = Certificate::Identity::family_pattern;
        c.r = g.order() + 1;
        c.kappa = k;
        c.alpha = alpha;
        c.layer = mu;
        c.witness = lhs - rhs;
        return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Decision decide_veronese(const RawGerm& raw, int q, int direction_samples, std::uint64_t seed) {
  Decision d;
  d.trace = run_pipeline(raw, q);
  switch (d.trace.verdict) {
    case ReductionTrace::Verdict::not_q_regular:
      d.verdict = Decision::Verdict::not_q_regular;
      return d;
    case ReductionTrace::Verdict::not_property_p:
      d.verdict = Decision::Verdict::not_property_p;
      d.certificate = d.trace.certificate;
      return d;
    case ReductionTrace::Verdict::reduced:
      break;
  }
  const Germ& g = *d.trace.final_germ;
  if (g == veronese(g.nvars(), q, g.trunc())) {
    d.verdict = Decision::Verdict::veronese;
    return d;
  }
  d.family = check_family_pattern(g);
  if (!d.family) {
    d.verdict = Decision::Verdict::not_property_p;
    d.certificate = family_pattern_violation(g);
    if (!d.certificate) throw std::logic_error("family pattern rejected without a violated layer");
    return d;
  }
  d.verdict = Decision::Verdict::property_p_not_veronese;
  if (g.trunc() >= 2 * q + 2) {
    d.lines_checked = true;
    d.directions = sample_directions(g.nvars(), direction_samples, seed);
    for (const auto& sigma : d.directions) {
      if (!fit_rnc(line_curve(g, sigma), q)) d.failing_directions.push_back(sigma);
    }
  }
  return d;
}

}  // namespace veronese
