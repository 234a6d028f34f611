#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "../support/literals.hpp"
#include "../support/oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/reduction.hpp"
#include "veronese/rnc.hpp"

using namespace veronese;
using testing_support::H;
using testing_support::J;

namespace {

const std::vector<std::tuple<int, int, int>> kCases{{2, 2, 7}, {3, 2, 8}, {2, 3, 9}};

Germ with_residuals(int n, int q, int t, const std::map<MultiIndex, const char*, GradedLess>& extra) {
  auto comps = veronese::veronese(n, q, t).components();
  for (const auto& [alpha, text] : extra) comps[static_cast<std::size_t>(canonical_index(alpha, n, q))] += J(text, n, t);
  return Germ(n, q, t, comps);
}

bool all_zero(const std::vector<HomogeneousPoly>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const auto& p) { return p.is_zero(); });
}

}  // namespace

TEST(ReduceToOrder1, VeroneseIsUnchanged) {
  const auto g = veronese::veronese(2, 2, 7);
  const auto [reduced, h] = reduce_to_order_1(g.raw(), 2);
  EXPECT_EQ(reduced.germ, g);
  EXPECT_EQ(reduced.r, 1);
  EXPECT_TRUE(h.is_identity());
}

TEST(ReduceToOrder1, LinearMixIsUndone) {
  auto comps = veronese::veronese(2, 2, 7).components();
  comps[0] = J("s1+s2", 2, 7);
  const auto [reduced, h] = reduce_to_order_1(RawGerm(2, 7, comps), 2);
  RationalMatrix expected = RationalMatrix::identity(5);
  expected(0, 1) = -1;
  EXPECT_EQ(h.a(), expected);
  EXPECT_TRUE(std::all_of(h.b().begin(), h.b().end(), [](const Rational& x) { return sgn(x) == 0; }));
  EXPECT_EQ(reduced.germ, veronese::veronese(2, 2, 7));
}

TEST(ReduceToOrder1, RejectsNonRegular) {
  const auto p = project_drop(veronese::veronese(2, 2, 7), MultiIndex{1, 1});
  EXPECT_THROW(reduce_to_order_1(p, 2), non_regular_error);
  auto comps = veronese::veronese(2, 2, 7).components();
  comps[3] = comps[2];
  EXPECT_THROW(reduce_to_order_1(RawGerm(2, 7, comps), 2), non_regular_error);
}

TEST(ReduceToOrder1, OutputSatisfiesOrder1Profile) {
  for (const auto& [n, q, t] : kCases) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto d = disguise(veronese::veronese(n, q, t), seed, 2);
      const auto [reduced, h] = reduce_to_order_1(d.germ.raw(), q);
      EXPECT_FALSE(profile_violation(reduced.germ, 1).has_value());
      EXPECT_EQ(apply_homography(h, d.germ), reduced.germ);
    }
  }
}

TEST(ExtractP, Examples) {
  for (int r = 1; r <= 3; ++r) {
    const auto p = extract_P(ReducedGerm{veronese::veronese(2, 2, 7), r});
    EXPECT_TRUE(p.all_zero());
  }
  const auto g = with_residuals(2, 2, 7, {{MultiIndex{2, 0}, "s2^3"}});
  const auto p = extract_P(ReducedGerm{g, 1});
  EXPECT_EQ(p.q1.at(MultiIndex{2, 0}), H("s2^3", 2, 3));
  EXPECT_TRUE(p.q2.empty());
  EXPECT_EQ(p.q1.size(), 3u);

  const auto top = extract_P(ReducedGerm{veronese::veronese(2, 2, 7), 3});
  EXPECT_TRUE(top.q1.empty());
  EXPECT_EQ(top.kappa2(), 1);
  EXPECT_EQ(top.q2.size(), 2u);
}

TEST(ExtractP, RejectsProfileViolation) {
  const auto g = with_residuals(2, 2, 7, {{MultiIndex{2, 0}, "s2^3"}});
  EXPECT_THROW(extract_P(ReducedGerm{g, 2}), inconsistency_error);
}

TEST(NormalizeOrderR, VeroneseIsFixed) {
  for (int r = 1; r <= 2; ++r) {
    const auto stage = normalize_order_r(ReducedGerm{veronese::veronese(2, 2, 7), r});
    EXPECT_TRUE(stage.data.g.is_zero());
    EXPECT_TRUE(all_zero(stage.data.h));
    EXPECT_EQ(stage.germ.germ, veronese::veronese(2, 2, 7));
    EXPECT_TRUE(stage.homography.is_identity());
  }
}

TEST(NormalizeOrderR, PivotCorrectionExample) {
  // the layers left by (I, b = e_(1,0)) on veronese(2,2) in the weight-2 pivots
  const auto g = with_residuals(2, 2, 7, {{MultiIndex{2, 0}, "-s1^3"}, {MultiIndex{1, 1}, "-s1^2*s2"}});
  const auto stage = normalize_order_r(ReducedGerm{g, 1});
  EXPECT_TRUE(stage.data.g.is_zero());
  EXPECT_EQ(stage.data.h[0], H("1/2*s1^2", 2, 2));
  EXPECT_EQ(stage.data.h[1], H("1/2*s1*s2", 2, 2));
  const auto p = extract_P(stage.germ);
  EXPECT_TRUE(p.at(MultiIndex{2, 0}).is_zero());
  EXPECT_TRUE(p.at(MultiIndex{1, 1}).is_zero());
  EXPECT_FALSE(profile_violation(stage.germ.germ, 1).has_value());
}

TEST(NormalizeOrderR, RejectsOrderOutOfRange) {
  EXPECT_THROW(normalize_order_r(ReducedGerm{veronese::veronese(2, 2, 7), 3}), domain_error);
}

TEST(NormalizeOrderR, BoundsUniquenessAndDualRoute) {
  for (const auto& [n, q, t] : kCases) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const int r = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(q));
      const auto g = testing_support::random_reduced_germ(n, q, t, r, seed * 7 + static_cast<std::uint64_t>(n + q));
      const ReducedGerm in{g, r};
      const auto before = extract_P(in);
      const auto stage = normalize_order_r(in);
      const auto after = extract_P(stage.germ);
      EXPECT_TRUE(satisfies_pivot_bounds(after));
      EXPECT_FALSE(profile_violation(stage.germ.germ, r).has_value());
      if (r >= 2) {
        EXPECT_TRUE(stage.data.g_unique());
        EXPECT_EQ(stage.data.g_unknowns, static_cast<int>(indices_of_weight(n, r).size()));
      } else {
        EXPECT_TRUE(stage.data.g.is_zero());
      }
      // the layers predicted from (G, H) agree with those extracted from the transformed germ
      const auto predicted = predicted_layers(before, stage.data.g, stage.data.h);
      EXPECT_EQ(predicted.q1, after.q1);
      EXPECT_EQ(predicted.q2, after.q2);
      // the homography and reparametrization reproduce the output
      EXPECT_EQ(apply_homography(stage.homography, reparametrize(g, stage.reparametrization)), stage.germ.germ);
    }
  }
}

TEST(SolveDistinguished, AllZero) {
  const auto p = extract_P(ReducedGerm{veronese::veronese(2, 2, 7), 2});
  const auto out = solve_distinguished(p);
  ASSERT_TRUE(out.solved());
  EXPECT_TRUE(all_zero(out.solution->a));
  for (const auto& [kappa, c] : out.solution->c) EXPECT_TRUE(c.is_zero());
  EXPECT_FALSE(out.certificate.has_value());
}

TEST(SolveDistinguished, PivotQuotientFailure) {
  const auto p = extract_P(ReducedGerm{testing_support::pivot_quotient_instance(), 1});
  ASSERT_TRUE(satisfies_pivot_bounds(p));
  const auto out = solve_distinguished(p);
  ASSERT_FALSE(out.solved());
  ASSERT_TRUE(out.certificate.has_value());
  const auto& cert = *out.certificate;
  EXPECT_EQ(cert.identity, Certificate::Identity::pivot_quotient);
  EXPECT_EQ(cert.kappa, 2);
  EXPECT_EQ(cert.j, 1);
  EXPECT_EQ(cert.divisor_power, 2);
  EXPECT_EQ(cert.witness, H("s2^4 - s1*s2^3", 2, 4));
  EXPECT_TRUE(certificate_is_violated(cert));
  EXPECT_FALSE(oracle::s1_divisible(oracle::from_jet(cert.witness.to_jet(4)), 2));
}

TEST(SolveDistinguished, RequiresNormalizedLayers) {
  const auto g = with_residuals(2, 2, 7, {{MultiIndex{2, 0}, "s1^2*s2"}});
  EXPECT_THROW(solve_distinguished(extract_P(ReducedGerm{g, 1})), domain_error);
}

TEST(SolveDistinguished, QuotientDiagnosticsAreRecorded) {
  const auto p = extract_P(ReducedGerm{testing_support::pivot_quotient_instance(), 1});
  const auto out = solve_distinguished(p);
  ASSERT_EQ(out.divisibility.size(), 2u);
  for (const auto& d : out.divisibility) {
    EXPECT_EQ(d.divisible, oracle::s1_divisible(oracle::from_jet(d.polynomial.to_jet(d.polynomial.degree())), 2));
  }
}

TEST(ClearedRelation, VanishesWhenTheDistinguishedRelationHolds) {
  oracle::Corpus corpus(8);
  for (const auto& [n, q, t] : kCases) {
    for (int r = 1; r <= q; ++r) {
      PGroups p;
      p.n = n;
      p.q = q;
      p.r = r;
      std::vector<HomogeneousPoly> a(static_cast<std::size_t>(n), HomogeneousPoly(n, r + 1));
      for (int i = 1; i < n; ++i) a[static_cast<std::size_t>(i)] = homogeneous_part(corpus.jet(n, r + 1, r + 1, 50), r + 1);
      for (const int kappa : {p.kappa1(), p.kappa2()}) {
        if (kappa == 0) continue;
        const auto c = homogeneous_part(corpus.jet(n, r, r, 50), r);
        auto& group = kappa == p.kappa1() ? p.q1 : p.q2;
        for (const auto& alpha : indices_of_weight(n, kappa)) {
          HomogeneousPoly pa = times_monomial(c, alpha);
          for (int i = 1; i < n; ++i) {
            if (alpha[i] > 0) pa -= times_monomial(a[static_cast<std::size_t>(i)], alpha - MultiIndex::unit(n, i), alpha[i]);
          }
          group.emplace(alpha, pa);
        }
        for (const auto& alpha : indices_of_weight(n, kappa)) EXPECT_TRUE(cleared_relation(p, alpha).is_zero());
      }
    }
  }
}

TEST(ClearedRelation, EqualsScaledResidualOfTheRelation) {
  // With s1^kappa a_j taken from the pivot quotient, the cleared relation is the
  // residual of the distinguished relation multiplied by s1^kappa.
  for (const auto& [n, q, t] : kCases) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto g = testing_support::random_reduced_germ(n, q, t, 1, seed);
      const auto p = extract_P(ReducedGerm{g, 1});
      const int kappa = p.kappa1();
      std::vector<HomogeneousPoly> a(static_cast<std::size_t>(n), HomogeneousPoly(n, 2));
      for (int j = 1; j < n; ++j) {
        const auto diff = times_monomial(p.at(MultiIndex::pivot(n, kappa)), MultiIndex::unit(n, j)) -
                          times_monomial(p.at(MultiIndex::pivot(n, kappa, j)), MultiIndex::unit(n, 0));
        a[static_cast<std::size_t>(j)] = diff;
      }
      for (const auto& alpha : indices_of_weight(n, kappa)) {
        // s1^kappa (P_alpha + sum a_i alpha_i s^alpha/s_i) - P_(kappa) s^alpha
        HomogeneousPoly expected = times_monomial(p.at(alpha), MultiIndex::pivot(n, kappa)) -
                                   times_monomial(p.at(MultiIndex::pivot(n, kappa)), alpha);
        for (int i = 1; i < n; ++i) {
          if (alpha[i] > 0) {
            expected += times_monomial(a[static_cast<std::size_t>(i)], alpha - MultiIndex::unit(n, i), alpha[i]);
          }
        }
        EXPECT_EQ(cleared_relation(p, alpha), expected);
      }
    }
  }
}

TEST(CheckVanishing, Examples) {
  for (int r = 1; r <= 2; ++r) {
    const auto res = check_vanishing(ReducedGerm{veronese::veronese(2, 2, 7), r});
    EXPECT_EQ(res.verdict, StageResult::Verdict::advance);
    EXPECT_EQ(res.germ.r, r + 1);
  }
  const auto stage = normalize_order_r(ReducedGerm{testing_support::pivot_quotient_instance(), 1});
  const auto res = check_vanishing(stage.germ);
  EXPECT_EQ(res.verdict, StageResult::Verdict::fail);
  EXPECT_EQ(res.germ.r, 1);
  EXPECT_NE(std::find(res.nonzero.begin(), res.nonzero.end(), MultiIndex{2, 0}), res.nonzero.end());
  EXPECT_FALSE(res.solve.solved());
}

TEST(Finalize, Examples) {
  const auto v = veronese::veronese(2, 2, 7);
  const auto [same, psi] = finalize(ReducedGerm{v, 3});
  EXPECT_EQ(same, v);
  EXPECT_EQ(psi, identity_substitution(2, 7));

  const auto g = with_residuals(2, 2, 7, {{MultiIndex{1, 0}, "s1^4 - 2*s2^4"}, {MultiIndex{0, 1}, "s1^3*s2"}});
  const auto [out, phi] = finalize(ReducedGerm{g, 3});
  for (int i = 0; i < 2; ++i) EXPECT_EQ(out[i], MJet::variable(2, 7, i));
  const std::vector<MJet> linear(g.components().begin(), g.components().begin() + 2);
  EXPECT_EQ(compose_substitutions(linear, phi), identity_substitution(2, 7));

  const auto fam = make_family_germ(2, 2, 7, {{2, J("s1^5", 2, 7)}});
  EXPECT_EQ(finalize(ReducedGerm{fam, 3}).first, fam);
  EXPECT_THROW(finalize(ReducedGerm{v, 2}), domain_error);
  EXPECT_THROW(finalize(ReducedGerm{with_residuals(2, 2, 7, {{MultiIndex{2, 0}, "s2^3"}}), 3}), inconsistency_error);
}

TEST(RunPipeline, DisguisedVeroneseReducesWithExactWitness) {
  const auto v = veronese::veronese(2, 2, 7);
  const auto d = disguise(v, 3, 2);
  const auto trace = run_pipeline(d.germ.raw(), 2);
  ASSERT_EQ(trace.verdict, ReductionTrace::Verdict::reduced);
  EXPECT_EQ(*trace.final_germ, v);
  ASSERT_EQ(trace.stages.size(), 2u);
  for (const auto& s : trace.stages) {
    EXPECT_EQ(s.verdict, StageResult::Verdict::advance);
    EXPECT_TRUE(replay_witness(d.germ.raw(), s.witness_homography, s.witness_reparametrization, s.germ_after));
  }
  EXPECT_TRUE(replay_witness(d.germ.raw(), *trace.witness_homography, trace.witness_reparametrization, v));
}

TEST(RunPipeline, FamilyGermKeepsItsResiduals) {
  const auto fam = make_family_germ(2, 2, 7, {{2, J("s1^5", 2, 7)}});
  const auto trace = run_pipeline(fam.raw(), 2);
  ASSERT_EQ(trace.verdict, ReductionTrace::Verdict::reduced);
  EXPECT_EQ(trace.final_germ->residual(MultiIndex{2, 0}), J("s1^7", 2, 7));
  EXPECT_EQ(*trace.final_germ, fam);
}

TEST(RunPipeline, PivotQuotientInstanceFailsAtFirstStage) {
  const auto trace = run_pipeline(testing_support::pivot_quotient_instance().raw(), 2);
  EXPECT_EQ(trace.verdict, ReductionTrace::Verdict::not_property_p);
  EXPECT_EQ(trace.failed_stage, 1);
  ASSERT_TRUE(trace.certificate.has_value());
  EXPECT_EQ(trace.certificate->identity, Certificate::Identity::pivot_quotient);
  EXPECT_TRUE(certificate_is_violated(*trace.certificate));
}

TEST(RunPipeline, NonRegularInput) {
  const auto trace = run_pipeline(project_drop(veronese::veronese(2, 2, 7), MultiIndex{1, 1}), 2);
  EXPECT_EQ(trace.verdict, ReductionTrace::Verdict::not_q_regular);
  EXPECT_TRUE(trace.stages.empty());
}

TEST(RunPipeline, ProfileAndWitnessSoundnessOnDisguises) {
  for (const auto& [n, q, t] : kCases) {
    for (std::uint64_t seed = 10; seed < 13; ++seed) {
      for (const bool family : {false, true}) {
        const auto base = family ? make_family_germ(n, q, t, testing_support::random_family(n, q, t, seed))
                                 : veronese::veronese(n, q, t);
        const auto d = disguise(base, seed, 1);
        const auto trace = run_pipeline(d.germ.raw(), q);
        ASSERT_EQ(trace.verdict, ReductionTrace::Verdict::reduced);
        for (const auto& s : trace.stages) {
          EXPECT_EQ(s.verdict, StageResult::Verdict::advance);
          EXPECT_FALSE(profile_violation(s.germ_after, s.r + 1).has_value());
          EXPECT_TRUE(replay_witness(d.germ.raw(), s.witness_homography, s.witness_reparametrization, s.germ_after));
        }
        EXPECT_TRUE(
            replay_witness(d.germ.raw(), *trace.witness_homography, trace.witness_reparametrization, *trace.final_germ));
      }
    }
  }
}

TEST(RunPipeline, CertificatesOnPerturbationsAreGenuine) {
  oracle::Corpus corpus(4242);
  int failures = 0;
  for (const auto& [n, q, t] : kCases) {
    for (int trial = 0; trial < 8; ++trial) {
      auto comps = veronese::veronese(n, q, t).components();
      const int slot = corpus.integer(n, static_cast<int>(comps.size()) - 1);
      comps[static_cast<std::size_t>(slot)] += corpus.jet(n, t, q + 1, 10, 2).drop_above(q + 2);
      const auto trace = run_pipeline(RawGerm(n, t, comps), q);
      if (trace.verdict != ReductionTrace::Verdict::not_property_p) continue;
      ++failures;
      ASSERT_TRUE(trace.certificate.has_value());
      const auto& cert = *trace.certificate;
      EXPECT_TRUE(certificate_is_violated(cert));
      const auto naive = oracle::from_jet(cert.witness.to_jet(cert.witness.degree()));
      if (cert.is_divisibility()) {
        EXPECT_FALSE(oracle::s1_divisible(naive, cert.divisor_power));
      } else {
        EXPECT_FALSE(naive.empty());
      }
    }
  }
  EXPECT_GT(failures, 5);
}

TEST(DecideVeronese, Examples) {
  const auto d = disguise(veronese::veronese(3, 2, 8), 5, 2);
  const auto dec = decide_veronese(d.germ.raw(), 2, 3);
  ASSERT_EQ(dec.verdict, Decision::Verdict::veronese);
  EXPECT_TRUE(replay_witness(d.germ.raw(), *dec.trace.witness_homography, dec.trace.witness_reparametrization,
                             veronese::veronese(3, 2, 8)));

  const auto fam = make_family_germ(2, 2, 7, {{2, J("s1^5", 2, 7)}});
  const auto f = decide_veronese(fam.raw(), 2, 4);
  EXPECT_EQ(f.verdict, Decision::Verdict::property_p_not_veronese);
  ASSERT_TRUE(f.lines_checked);
  ASSERT_FALSE(f.failing_directions.empty());
  EXPECT_EQ(f.failing_directions.front(), (std::vector<Rational>{1, 1}));

  const auto p = decide_veronese(project_drop(veronese::veronese(2, 2, 7), MultiIndex{1, 1}), 2, 3);
  EXPECT_EQ(p.verdict, Decision::Verdict::not_q_regular);
}

TEST(DecideVeronese, StandardGermHasIdentityWitness) {
  for (const auto& [n, q, t] : kCases) {
    const auto v = veronese::veronese(n, q, t);
    const auto dec = decide_veronese(v.raw(), q, 1);
    ASSERT_EQ(dec.verdict, Decision::Verdict::veronese);
    EXPECT_TRUE(dec.trace.witness_homography->is_identity());
    EXPECT_EQ(dec.trace.witness_reparametrization, identity_substitution(n, t));
  }
}

TEST(DecideVeronese, BrokenFamilyPatternIsCertified) {
  const auto g = with_residuals(2, 2, 7, {{MultiIndex{2, 0}, "s2^7"}});
  const auto dec = decide_veronese(g.raw(), 2, 3);
  EXPECT_EQ(dec.verdict, Decision::Verdict::not_property_p);
  ASSERT_TRUE(dec.certificate.has_value());
  EXPECT_EQ(dec.certificate->identity, Certificate::Identity::family_pattern);
  EXPECT_TRUE(certificate_is_violated(*dec.certificate));
}

TEST(DecideVeronese, PivotQuotientInstance) {
  const auto dec = decide_veronese(testing_support::pivot_quotient_instance().raw(), 2, 3);
  EXPECT_EQ(dec.verdict, Decision::Verdict::not_property_p);
  ASSERT_TRUE(dec.certificate.has_value());
  EXPECT_EQ(dec.certificate->identity, Certificate::Identity::pivot_quotient);
}

TEST(SampleDirections, StartsWithOnesAndIsDeterministic) {
  const auto a = sample_directions(3, 5, 9);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a.front(), (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(a, sample_directions(3, 5, 9));
  EXPECT_TRUE(sample_directions(2, 0, 1).empty());
  auto many = sample_directions(2, 40, 3);
  EXPECT_EQ(many.size(), 40u);
  std::sort(many.begin(), many.end());
  EXPECT_EQ(std::adjacent_find(many.begin(), many.end()), many.end());
}
