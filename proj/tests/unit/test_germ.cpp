#include <gtest/gtest.h>

#include "../support/literals.hpp"
#include "../support/oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/germ.hpp"

using namespace veronese;
using testing_support::J;

namespace {

std::vector<MJet> jets(std::initializer_list<const char*> texts, int n, int t) {
  std::vector<MJet> out;
  for (const auto* s : texts) out.push_back(J(s, n, t));
  return out;
}

/// Independent binomial via Pascal's triangle.
int pascal(int a, int b) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(a + 1), std::vector<int>(static_cast<std::size_t>(a + 1)));
  for (int i = 0; i <= a; ++i) {
    c[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          (j < i ? c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
    }
  }
  return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

}  // namespace

TEST(Veronese, StandardComponents) {
  const auto g = veronese::veronese(2, 2, 7);
  EXPECT_EQ(g.components(), jets({"s1", "s2", "s1^2", "s1*s2", "s2^2"}, 2, 7));
  EXPECT_EQ(g.size(), 5);
  const auto curve = veronese::veronese(1, 4, 8);
  EXPECT_EQ(curve.components(), jets({"s1", "s1^2", "s1^3", "s1^4"}, 1, 8));
  EXPECT_THROW(veronese::veronese(2, 2, 4), domain_error);
}

TEST(Germ, ValidatesShape) {
  EXPECT_THROW(Germ(2, 2, 7, jets({"s1", "s2"}, 2, 7)), domain_error);
  EXPECT_THROW(Germ(2, 2, 7, jets({"1+s1", "s2", "s1^2", "s1*s2", "s2^2"}, 2, 7)), domain_error);
  EXPECT_THROW(RawGerm(2, 7, jets({"1+s1"}, 2, 7)), domain_error);
}

TEST(Reparametrize, Examples) {
  const auto g = veronese::veronese(2, 2, 7);
  EXPECT_EQ(reparametrize(g, identity_substitution(2, 7)), g);
  const auto swapped = reparametrize(g, jets({"s2", "s1"}, 2, 7));
  EXPECT_EQ(swapped.components(), jets({"s2", "s1", "s2^2", "s1*s2", "s1^2"}, 2, 7));
  const auto bent = reparametrize(g, jets({"s1+s1^2", "s2"}, 2, 7));
  EXPECT_EQ(bent.component(MultiIndex{2, 0}), J("s1^2+2*s1^3+s1^4", 2, 7));
  EXPECT_THROW(reparametrize(g, jets({"s1", "s1"}, 2, 7)), domain_error);
}

TEST(Osculating, VeroneseDimensionsAreMaximal) {
  for (const auto [n, q] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const auto g = veronese::veronese(n, q, q + 4);
    for (int k = 1; k <= q; ++k) EXPECT_EQ(osculating_dimension(g, k), pascal(n + k, k) - 1);
    EXPECT_TRUE(is_q_regular(g, q));
  }
  EXPECT_EQ(osculating_dimension(veronese::veronese(2, 2, 7), 1), 2);
  EXPECT_EQ(osculating_dimension(veronese::veronese(2, 2, 7), 2), 5);
  EXPECT_EQ(osculating_dimension(veronese::veronese(3, 2, 7), 2), 9);
  EXPECT_TRUE(is_q_regular(veronese::veronese(2, 3, 7), 2));
}

TEST(Osculating, RegularityAtLowerOrderOfHigherVeronese) {
  // veronese(2,3) restricted to its first 5 coordinates is 2-regular
  const auto g = veronese::veronese(2, 3, 7);
  const std::vector<MJet> first(g.components().begin(), g.components().begin() + 5);
  EXPECT_TRUE(is_q_regular(first, 2));
}

TEST(ProjectDrop, Examples) {
  const auto g = veronese::veronese(2, 2, 7);
  EXPECT_EQ(project_drop(g, MultiIndex{1, 1}).components(), jets({"s1", "s2", "s1^2", "s2^2"}, 2, 7));
  EXPECT_EQ(project_drop(g, MultiIndex{2, 0}).components(), jets({"s1", "s2", "s1*s2", "s2^2"}, 2, 7));
  EXPECT_THROW(project_drop(g, MultiIndex{3, 0}), domain_error);
  const auto p = project_drop(g, MultiIndex{1, 1});
  EXPECT_EQ(osculating_dimension(p, 2), 4);
  EXPECT_FALSE(is_q_regular(p, 2));
}

TEST(LineCurve, Examples) {
  const auto g = veronese::veronese(2, 2, 7);
  const std::vector<Rational> s12{1, 2};
  const auto c = line_curve(g, s12);
  EXPECT_EQ(c[0], UJet(7, {0, 1}));
  EXPECT_EQ(c[1], UJet(7, {0, 2}));
  EXPECT_EQ(c[2], UJet(7, {0, 0, 1}));
  EXPECT_EQ(c[3], UJet(7, {0, 0, 2}));
  EXPECT_EQ(c[4], UJet(7, {0, 0, 4}));
  const std::vector<Rational> s10{1, 0};
  const auto d = line_curve(g, s10);
  EXPECT_TRUE(d[1].is_zero() && d[3].is_zero() && d[4].is_zero());
  const std::vector<Rational> zero{0, 0};
  EXPECT_THROW(line_curve(g, zero), domain_error);

  const auto fam = make_family_germ(2, 2, 7, {{2, J("s1^5", 2, 7)}});
  const std::vector<Rational> ones{1, 1};
  EXPECT_EQ(line_curve(fam, ones)[2], UJet(7, {0, 0, 1, 0, 0, 0, 0, 1}));
}

TEST(CurveSpanRank, Examples) {
  const std::vector<Rational> s12{1, 2};
  EXPECT_EQ(curve_span_rank(line_curve(veronese::veronese(2, 2, 7), s12), 7), 2);
  for (int q = 1; q <= 5; ++q) {
    const auto moment = veronese::veronese(1, q, q + 3);
    const std::vector<Rational> one{1};
    EXPECT_EQ(curve_span_rank(line_curve(moment, one), q), q);
  }
}

TEST(FamilyGerm, Examples) {
  EXPECT_EQ(make_family_germ(2, 2, 7, {}), veronese::veronese(2, 2, 7));
  const auto g = make_family_germ(2, 2, 7, {{2, J("s1^5", 2, 7)}});
  EXPECT_EQ(g.component(MultiIndex{2, 0}), J("s1^2+s1^7", 2, 7));
  EXPECT_EQ(g.component(MultiIndex{1, 1}), J("s1*s2+s1^6*s2", 2, 7));
  EXPECT_EQ(g.component(MultiIndex{0, 2}), J("s2^2+s1^5*s2^2", 2, 7));
  EXPECT_THROW(make_family_germ(2, 2, 7, {{2, J("s1^2", 2, 7)}}), domain_error);
}

TEST(FamilyPattern, Examples) {
  const auto v = veronese::veronese(2, 2, 7);
  const auto rs = check_family_pattern(v);
  ASSERT_TRUE(rs.has_value());
  for (const auto& [k, r] : *rs) EXPECT_TRUE(r.is_zero());

  std::vector<MJet> comps = v.components();
  comps[2] += J("s2^7", 2, 7);
  EXPECT_FALSE(check_family_pattern(Germ(2, 2, 7, comps)).has_value());
}

TEST(FamilyPattern, RoundTripAndLineSpans) {
  oracle::Corpus corpus(31);
  for (const auto [n, q] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const int t = std::max(q + 4, 2 * q + 2);
    for (int trial = 0; trial < 10; ++trial) {
      std::map<int, MJet> r;
      for (int k = 2; k <= q; ++k) r.emplace(k, corpus.jet(n, t, q + 3 - k, 15, 2));
      const auto g = make_family_germ(n, q, t, r);
      const auto back = check_family_pattern(g);
      ASSERT_TRUE(back.has_value());
      // terms of R_k above degree t - k fall below the truncation
      for (auto& [k, rk] : r) rk = rk.drop_above(t - k);
      EXPECT_EQ(*back, r);
      for (int s = 0; s < 10; ++s) {
        std::vector<Rational> sigma;
        for (int i = 0; i < n; ++i) sigma.push_back(corpus.rational(3));
        if (std::all_of(sigma.begin(), sigma.end(), [](const Rational& x) { return sgn(x) == 0; })) sigma[0] = 1;
        EXPECT_EQ(curve_span_rank(line_curve(g, sigma), t), q);
      }
    }
  }
}

TEST(Disguise, ZeroMagnitudeIsTrivial) {
  const auto g = veronese::veronese(2, 2, 7);
  const auto d = disguise(g, 1, 0);
  EXPECT_EQ(d.germ, g);
  EXPECT_TRUE(d.homography.is_identity());
  EXPECT_EQ(d.reparametrization, identity_substitution(2, 7));
}

TEST(Disguise, DeterministicRegularAndUndoable) {
  const auto g = veronese::veronese(2, 2, 7);
  const auto d = disguise(g, 1, 2);
  EXPECT_EQ(d.germ, disguise(g, 1, 2).germ);
  EXPECT_TRUE(is_q_regular(d.germ, 2));
  EXPECT_EQ(undisguise(d), g);
  EXPECT_EQ(apply_homography(d.homography, reparametrize(g, d.reparametrization)), d.germ);
}

TEST(Disguise, RegularityIsInvariant) {
  const auto g = veronese::veronese(2, 2, 7);
  const auto p = project_drop(g, MultiIndex{1, 1});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    EXPECT_TRUE(is_q_regular(disguise(g, seed, 2).germ, 2));
    const auto psi = random_reparametrization(2, 7, seed, 2);
    EXPECT_FALSE(is_q_regular(reparametrize(p, psi), 2));
    const auto h = random_homography(2, 2, seed, 2);
    EXPECT_TRUE(is_q_regular(apply_homography(h, g), 2));
  }
}

TEST(Osculating, BoundedAndMonotone) {
  oracle::Corpus corpus(55);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = corpus.integer(1, 3);
    const int t = 5;
    const int m = corpus.integer(1, 8);
    std::vector<MJet> comps;
    for (int i = 0; i < m; ++i) comps.push_back(corpus.jet(n, t, 1, 20));
    int prev = 0;
    for (int k = 1; k <= t; ++k) {
      const int d = osculating_dimension(comps, k);
      EXPECT_GE(d, prev);
      EXPECT_LE(d, std::min(pascal(n + k, k) - 1, m));
      prev = d;
    }
  }
}
