#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "veronese/germ.hpp"
#include "veronese/homogeneous.hpp"
#include "veronese/homography.hpp"
#include "veronese/linalg.hpp"

namespace veronese {

/// A germ together with the order r of its reduced-form profile:
///   x_alpha - s^alpha = O(|s|^{q+1})  when |alpha| + r <= q + 1,
///                     = O(|s|^{q+2})  when |alpha| + r == q + 2,
///                     = O(|s|^{q+3})  when |alpha| + r >= q + 3.
struct ReducedGerm {
  Germ germ;
  int r = 1;
};

/// Lowest degree the residual of a weight-w coordinate may carry at order r.
int profile_min_degree(int q, int r, int w);

/// First coordinate violating the order-r profile, or nullopt.
std::optional<MultiIndex> profile_violation(const Germ& g, int r);

using PolyMap = std::map<MultiIndex, HomogeneousPoly, GradedLess>;

/// The graded layers P_alpha still separating the germ from the next order:
/// q1 holds |alpha| + r = q + 1 (degree q + 1), q2 holds |alpha| + r = q + 2
/// (degree q + 2).
struct PGroups {
  int n = 0;
  int q = 0;
  int r = 0;
  PolyMap q1;
  PolyMap q2;

  /// Weight of the q1 group (q + 1 - r), 0 when absent.
  int kappa1() const { return r <= q ? q + 1 - r : 0; }
  /// Weight of the q2 group (q + 2 - r), 0 when absent.
  int kappa2() const { return r >= 2 && r <= q + 1 ? q + 2 - r : 0; }
  bool all_zero() const;
  /// The layer P_alpha from whichever group holds alpha (zero polynomial otherwise).
  HomogeneousPoly at(const MultiIndex& alpha) const;
};

struct NormalizationData {
  /// Degree-r form G of the projective change x -> x / (1 - G^(x)); zero when r = 1.
  HomogeneousPoly g;
  /// Degree-(r+1) corrections of the parameter change s_j -> s_j + H_j(s).
  std::vector<HomogeneousPoly> h;
  /// The data-dependent parts: H_1 = -s_1 G / kappa + A(s), and
  /// P'_(kappa2) = P_(kappa2) - s_1^kappa2 G / (kappa2 - 1) + B(s).
  HomogeneousPoly a_part;
  std::optional<HomogeneousPoly> b_part;
  /// Linear coordinate fix restoring the profile of weights with |alpha| + r <= q.
  RationalMatrix anodine;
  /// Size and rank of the linear system determining G (r >= 2).
  int g_unknowns = 0;
  int g_rank = 0;
  bool g_unique() const { return g_rank == g_unknowns; }
};

struct NormalizedStage {
  ReducedGerm germ;
  NormalizationData data;
  /// anodine o (I, b_G): the homography applied in this stage.
  Homography homography;
  /// s_j + H_j(s).
  std::vector<MJet> reparametrization;
};

/// A polynomial identity whose failure proves the germ lacks property (P).
struct Certificate {
  enum class Identity {
    distinguished_relation,  // sum_{i>=2} a_i alpha_i s^alpha / s_i + P_alpha = c_kappa s^alpha
    pivot_quotient,          // s_1^kappa divides P_(kappa) s_j - P_(kappa-1;j) s_1
    cleared_relation,        // the distinguished relation multiplied by s_1^kappa, a_j and c eliminated
    weighted_quotient,       // s_1^kappa divides (1 - kappa) P_(kappa) s_j + kappa P_(kappa-1;j) s_1
    shifted_quotient,        // s_1^kappa divides (2 - kappa) P_(kappa) s_j s_1 + (kappa - 1) P_(kappa-1;j) s_1^2
    family_pattern,          // Q_{mu,alpha} s_1^k = s^alpha Q_{mu,(k)} on the final residual layers
  };
  Identity identity;
  int r = 0;
  int kappa = 0;
  int j = 0;                          // 0-based variable slot of the quotient identities
  std::optional<MultiIndex> alpha;    // for the relations and the family pattern
  int layer = 0;                      // mu for family_pattern
  /// With divisor_power > 0: the polynomial s_1^divisor_power must divide.
  /// Otherwise: the difference of the two sides, which must vanish.
  HomogeneousPoly witness;
  int divisor_power = 0;

  bool is_divisibility() const { return divisor_power > 0; }
  std::string describe() const;
};

std::string identity_name(Certificate::Identity id);

/// Outcome of one weighted or shifted quotient diagnostic.
struct DivisibilityCheck {
  Certificate::Identity identity;
  int kappa = 0;
  int j = 0;
  HomogeneousPoly polynomial;
  bool divisible = false;
};

struct DistinguishedSolution {
  /// a_1..a_n as forms of degree r + 1; a[0] is zero by the pivot convention.
  std::vector<HomogeneousPoly> a;
  /// c_kappa for each group weight.
  std::map<int, HomogeneousPoly> c;
};

struct SolveOutcome {
  std::optional<DistinguishedSolution> solution;
  std::optional<Certificate> certificate;
  std::vector<DivisibilityCheck> divisibility;
  bool solved() const { return solution.has_value(); }
};

struct StageResult {
  enum class Verdict { advance, fail };
  Verdict verdict = Verdict::fail;
  /// The germ at order r + 1 on advance, the unchanged input on failure.
  ReducedGerm germ;
  PGroups p;
  /// Coordinates whose P_alpha survived normalization.
  std::vector<MultiIndex> nonzero;
  SolveOutcome solve;
};

/// Linear change of coordinates A = C^{-1}, C the degree-<=q coefficient
/// matrix. non_regular_error when raw is not q-regular or does not have N components.
std::pair<ReducedGerm, Homography> reduce_to_order_1(const RawGerm& raw, int q);

/// P_alpha = homogeneous part of degree |alpha| + r of x_alpha - s^alpha.
/// inconsistency_error when the profile does not hold.
PGroups extract_P(const ReducedGerm& g);

/// Normalizes the pivot layers (s_1-degree bounds) with a projective change, a
/// parameter change and a linear fix. Requires 1 <= r <= q.
NormalizedStage normalize_order_r(const ReducedGerm& g);

/// P'_alpha = P_alpha + s^alpha G + sum_j alpha_j s^alpha / s_j H_j for the two
/// groups: the first-order effect of a normalization on the layers.
PGroups predicted_layers(const PGroups& p, const HomogeneousPoly& g, const std::vector<HomogeneousPoly>& h);

/// True when the pivot layers satisfy the post-normalization s_1-degree bounds.
bool satisfies_pivot_bounds(const PGroups& p);

/// Solves for the distinguished-curve data; failures are certified.
/// domain_error when the pivot bounds do not hold.
SolveOutcome solve_distinguished(const PGroups& p);

/// Advance iff every P_alpha vanishes after normalization.
StageResult check_vanishing(const ReducedGerm& normalized);

/// From the order-(q+1) profile to x_alpha = s^alpha (|alpha| = 1),
/// x_alpha = s^alpha + O(|s|^{q+3}) (|alpha| >= 2). Returns the germ and the
/// reparametrization used.
std::pair<Germ, std::vector<MJet>> finalize(const ReducedGerm& g);

/// Re-checks that the identity recorded in a certificate genuinely fails.
bool certificate_is_violated(const Certificate& cert);

/// P_alpha s_1^kappa - (1 - sum_{i>=2} alpha_i) P_(kappa) s^alpha
///   - sum_{i>=2} alpha_i s_1 s^alpha / s_i P_(kappa-1;i)
/// for |alpha| = kappa a group weight of p; zero whenever the distinguished
/// relation holds.
HomogeneousPoly cleared_relation(const PGroups& p, const MultiIndex& alpha);

struct StageRecord {
  int r = 0;
  PGroups extracted;
  NormalizationData normalization;
  Homography homography;
  std::vector<MJet> reparametrization;
  PGroups normalized;
  SolveOutcome solve;
  StageResult::Verdict verdict = StageResult::Verdict::fail;
  /// Germ after the stage and the accumulated witness mapping the input to it.
  Germ germ_after;
  Homography witness_homography;
  std::vector<MJet> witness_reparametrization;
};

struct ReductionTrace {
  enum class Verdict { reduced, not_q_regular, not_property_p };
  int n = 0;
  int q = 0;
  int trunc = 0;
  Verdict verdict = Verdict::not_q_regular;
  std::optional<Homography> order1;
  std::vector<StageRecord> stages;
  std::vector<MJet> final_reparametrization;
  /// Last germ reached (the reduced normal form when the verdict is reduced).
  std::optional<Germ> final_germ;
  /// apply(witness_homography, reparametrize(input, witness_reparametrization)) == final_germ.
  std::optional<Homography> witness_homography;
  std::vector<MJet> witness_reparametrization;
  std::optional<Certificate> certificate;
  int failed_stage = 0;
};

std::string to_string(ReductionTrace::Verdict v);

/// Order-1 reduction, then for r = 1..q normalize, solve, check; then finalize.
ReductionTrace run_pipeline(const RawGerm& raw, int q);

/// Replays the witness on the input; true when it reproduces the final germ exactly.
bool replay_witness(const RawGerm& input, const Homography& h, const std::vector<MJet>& psi, const Germ& expected);

struct Decision {
  enum class Verdict { veronese, not_q_regular, not_property_p, property_p_not_veronese };
  Verdict verdict = Verdict::not_q_regular;
  ReductionTrace trace;
  std::optional<Certificate> certificate;
  std::optional<std::map<int, MJet>> family;
  /// Directions whose line image was tested against fit_rnc, and those that failed.
  std::vector<std::vector<Rational>> directions;
  std::vector<std::vector<Rational>> failing_directions;
  bool lines_checked = false;
};

std::string to_string(Decision::Verdict v);

/// Seeded distinct directions: the all-ones vector first, then random nonzero vectors.
std::vector<std::vector<Rational>> sample_directions(int n, int count, std::uint64_t seed);

/// Decides whether raw is a germ of the standard Veronese variety of order q.
Decision decide_veronese(const RawGerm& raw, int q, int direction_samples, std::uint64_t seed = 1);

}  // namespace veronese
