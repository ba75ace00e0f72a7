#include <gtest/gtest.h>

#include "corank2/classify.hpp"
#include "oracle.hpp"

using namespace corank2;
using namespace corank2::oracle;

TEST(Oracle, ConditionExamples) {
  EXPECT_EQ(brute_force_condition(reduced_form_jet({1, 1, 0, 0, 0})), Rational(1));
  EXPECT_EQ(brute_force_condition(reduced_form_jet({1, 1, 0, 0, 1})), 0);
  EXPECT_EQ(brute_force_condition(reduced_form_jet({-1, 3, 0, 1, 0})), 0);
}

TEST(Oracle, RejectsNonReducedInput) {
  auto f = reduced_form_jet({1, 1, 0, 0, 0});
  f.second.coeff(1, 1) = 1;
  EXPECT_THROW(brute_force_condition(f), NotReducedFormError);
  auto g = reduced_form_jet({1, 1, 0, 0, 0});
  g.first.coeff(2, 1) = 1;
  EXPECT_THROW(brute_force_condition(g), NotReducedFormError);
}

TEST(Oracle, IdentityDiffeosLeaveGermUnchanged) {
  const auto f = reduced_form_jet({1, 2, -1, 1, 3});
  const auto id = rotation_diffeo(4, 1, 0);
  EXPECT_EQ(compose(id.map, compose(f, id.map)), f);
}

TEST(Oracle, HalfTurnIsTwoSignFlips) {
  const auto f = reduced_form_jet({1, 2, -1, 1, 3});
  const auto r = rotation_diffeo(4, -1, 0);
  const auto g = compose(r.map, compose(f, r.map));
  // -f(-u,-v): even-degree terms change sign once, odd-degree terms twice
  for (int c = 0; c < 2; ++c)
    for (int d = 0; d <= 4; ++d)
      for (int j = 0; j <= d; ++j) {
        const QuadScalar want = d % 2 == 0 ? -f[c].coeff(d - j, j) : f[c].coeff(d - j, j);
        EXPECT_EQ(g[c].coeff(d - j, j), want);
      }
}

TEST(Oracle, SeedsAreReproducible) {
  const auto f = reduced_form_jet({1, 1, 0, 0, 0});
  EXPECT_EQ(random_a_equivalence(f, 42, Restriction::General), random_a_equivalence(f, 42, Restriction::General));
  EXPECT_FALSE(random_a_equivalence(f, 42, Restriction::General) == random_a_equivalence(f, 43, Restriction::General));
}

TEST(Oracle, RandomDiffeosRespectRestrictions) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto d = random_diffeo(4, rng, Restriction::OrientationPreserving);
    const QuadScalar det = d.map.first.coeff(1, 0) * d.map.second.coeff(0, 1) -
                           d.map.first.coeff(0, 1) * d.map.second.coeff(1, 0);
    EXPECT_EQ(det.sign(), 1);
    const auto r = random_rotation(4, rng);
    EXPECT_EQ(r.map.first.coeff(1, 0) * r.map.first.coeff(1, 0) + r.map.second.coeff(1, 0) * r.map.second.coeff(1, 0),
              QuadScalar(1));
  }
}

TEST(Oracle, TildeShiftExamples) {
  const auto a = tilde_shift_check(reduced_form_jet({1, 0, 0, 1, 0}));
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.a30_tilde, 3);
  const auto b = tilde_shift_check(reduced_form_jet({-1, 2, 0, 0, 5}));
  EXPECT_TRUE(b.ok());
  EXPECT_EQ(b.a30_tilde, 2);
  EXPECT_EQ(b.a03_tilde, 5);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const ReducedForm r{k % 2 == 0 ? 1 : -1, random_rational(rng, 4, 3), random_rational(rng, 4, 3),
                        random_rational(rng, 4, 3), random_rational(rng, 4, 3)};
    EXPECT_TRUE(tilde_shift_check(reduced_form_jet(r)).ok());
  }
}

TEST(Oracle, ShiftPreservesVerdict) {
  // the shifted form is A-equivalent, so the closed condition on (a30~, a03~) with
  // vanishing mixed terms must agree with the original
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const ReducedForm r{k % 2 == 0 ? 1 : -1, random_rational(rng, 2), random_rational(rng, 2), random_rational(rng, 2),
                        random_rational(rng, 2)};
    const auto t = tilde_shift_check(reduced_form_jet(r));
    const ReducedForm shifted{r.eps, t.a30_tilde, 0, 0, t.a03_tilde};
    EXPECT_EQ(brute_force_condition(reduced_form_jet(r)) != 0, brute_force_condition(reduced_form_jet(shifted)) != 0);
  }
}

TEST(Oracle, BruteForceIterateAgreesWithHandComputation) {
  // xi = (1 + u) d/du on f = (u^2, 0): xi f1 = 2u(1+u), xi^2 f1 = (1+u)(2 + 4u) -> 2 at 0
  Jet2<QuadScalar> a = Jet2<QuadScalar>::constant(4, 1) + Jet2<QuadScalar>::u(4), b(4);
  const QJet f{Jet2<QuadScalar>::monomial(4, 2, 0, 1), Jet2<QuadScalar>(4)};
  EXPECT_EQ(brute_force_iterate(f, a, b, 2)[0], QuadScalar(2));
  // xi^3 f1 = (1+u)(4 + 8u ... ) derivative: d/du[(1+u)(2+4u)] = 6 + 8u, times (1+u) -> 6 at 0
  EXPECT_EQ(brute_force_iterate(f, a, b, 3)[0], QuadScalar(6));
}
