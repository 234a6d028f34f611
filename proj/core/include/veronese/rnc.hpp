#pragma once

#include <optional>
#include <string>
#include <vector>

#include "veronese/germ.hpp"
#include "veronese/ujet.hpp"

namespace veronese {

/// Rational curve t |-> [X_0(t) : X_1(t) : ... : X_d(t)] with deg X_j <= q.
class RncPoly {
 public:
  /// domain_error if some X_j has degree > q or X_0 is identically zero.
  RncPoly(int q, std::vector<UPoly> polys);

  /// (1, t, t^2, ..., t^q).
  static RncPoly moment_curve(int q);

  int degree_bound() const noexcept { return q_; }
  /// d: the curve lives in P^d.
  int dim() const noexcept { return static_cast<int>(polys_.size()) - 1; }
  const std::vector<UPoly>& polys() const noexcept { return polys_; }
  const UPoly& operator[](int j) const { return polys_[static_cast<std::size_t>(j)]; }

  /// Same curve after multiplying every X_j by lambda (lambda != 0).
  RncPoly rescaled(const Rational& lambda) const;
  /// Same curve after t |-> a t.
  RncPoly scaled_parameter(const Rational& a) const;
  /// Same curve after the projective change t |-> t / (1 + b t), written with
  /// degree-q homogenization: X_j(t) |-> sum_k c_{j,k} t^k (1 + b t)^{q-k}.
  RncPoly mobius(const Rational& b) const;

  friend bool operator==(const RncPoly&, const RncPoly&) = default;

 private:
  int q_;
  std::vector<UPoly> polys_;
};

/// Rescale and substitute t |-> a t so that X_0 = 1 + O(t) and X_1 = t + O(t^2).
/// not_in_chart_error if X_0(0) = 0; bad_tangent_error if X_1(0) != 0 or X_1'(0) = 0.
RncPoly normalize_param(const RncPoly& c);

/// Jets of x_j = X_j / X_0, j = 1..d, to order trunc. not_in_chart_error if X_0(0) = 0.
CurveJet affine_jets(const RncPoly& c, int trunc);

/// One identity of the rigidity induction, evaluated on the concrete a_j.
struct RigidityEquation {
  enum class Group {
    degree_bound,   // a_j = 0 for j >= 1, j + r >= q + 1
    graph_relation  // a_j + (j - 1) a_0 - j a_1 = 0 for j >= 2, j + r <= q + 2
  };
  Group group;
  int j = 0;
  Rational value;  // left-hand side; the identity holds iff value == 0
  bool holds() const { return sgn(value) == 0; }
};

struct RigidityRound {
  int r = 0;
  /// Projective parameter change t |-> t/(1 + b t) applied at this round
  /// before reading the a_j (only ever at r = 1).
  std::optional<Rational> mobius_shift;
  /// a_0..a_q: X_j = t^j + a_j t^{j+r} + O(t^{j+r+1}).
  std::vector<Rational> a;
  std::vector<RigidityEquation> equations;
};

struct RigidityCertificate {
  std::vector<RigidityRound> rounds;
  /// The curve after the induction (X_j = t^j when rigid).
  RncPoly final_curve;
  bool rigid = false;
};

/// Runs the order-by-order induction X_j = t^j + O(t^{j+r}), r = 1..q, on a
/// normalized curve in P^q whose graph x_j = x_1^j + g_j(x_1) has g_j = O(x_1^{q+3}).
/// hypothesis_error when the curve is not normalized or the graph condition fails.
RigidityCertificate rigidity_check(const RncPoly& c);

/// Fits x_j(t) X_0(t) = X_j(t) mod t^{trunc+1} with deg X_j <= q and X_0(0) = 1.
/// Returns the curve iff the system is consistent with a unique solution, the
/// X_j span a (q+1)-dimensional space and have no common factor.
/// insufficient_order_error when trunc < 2q + 2.
std::optional<RncPoly> fit_rnc(const CurveJet& c, int q);

}  // namespace veronese
