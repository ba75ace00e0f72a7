#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "corank2/normalform.hpp"
#include "oracle.hpp"

using namespace corank2;
using D = Jet2<double>;
using MD = MapJet2<double>;

namespace {

MD germ(int n, std::initializer_list<std::tuple<int, int, int, double>> terms) {
  D f1(n), f2(n);
  for (const auto& [c, i, j, v] : terms) (c == 1 ? f1 : f2).coeff(i, j) = v;
  return {f1, f2};
}

double max_diff(const D& a, const D& b, int up_to) {
  double m = 0.0;
  for (int d = 0; d <= up_to; ++d)
    for (int j = 0; j <= d; ++j) m = std::max(m, std::abs(a.coeff_or_zero(d - j, j) - b.coeff_or_zero(d - j, j)));
  return m;
}

double max_diff(const MD& a, const MD& b, int up_to) {
  return std::max(max_diff(a.first, b.first, up_to), max_diff(a.second, b.second, up_to));
}

bool first_is_uv(const MD& g, double tol) {
  D uv(g.order());
  uv.coeff(1, 1) = 1.0;
  return max_diff(g.first, uv, g.order()) < tol;
}

std::vector<MD> random_recognized(std::mt19937_64& rng, int count, Verdict want) {
  std::vector<MD> out;
  while (static_cast<int>(out.size()) < count) {
    const auto f = oracle::random_germ(4, rng, 2, 3, 2);
    if (classify_germ(f).verdict == want) out.push_back(to_double(f));
  }
  return out;
}

}  // namespace

TEST(NormalForm, UvFormIsLeftAlone) {
  const MD f = germ(4, {{1, 1, 1, 1}, {2, 2, 0, 0.5}, {2, 0, 2, 0.5}, {2, 3, 0, 1.0}});
  const NormalFormStage s = reduce_to_uv_form(f);
  EXPECT_LT(max_diff(s.source, MD::identity(4), 4), 1e-12);
  EXPECT_EQ(s.rotation, 0.0);
  EXPECT_LT(max_diff(s.jet, f, 4), 1e-12);
}

TEST(NormalForm, ReduceSquareMap) {
  const MD f = germ(4, {{1, 2, 0, 1}, {1, 0, 2, -1}, {2, 1, 1, 2}});
  const NormalFormStage s = reduce_to_uv_form(f);
  EXPECT_TRUE(first_is_uv(s.jet, 1e-12));
  // the recorded transforms reproduce the jet
  EXPECT_LT(max_diff(rotate_target(compose(f, s.source), s.rotation), s.jet, 4), 1e-12);
}

TEST(NormalForm, ReduceFoldProduct) {
  const MD f = germ(4, {{1, 2, 0, 1}, {2, 0, 2, 1}});
  const NormalFormStage s = reduce_to_uv_form(f);
  EXPECT_TRUE(first_is_uv(s.jet, 1e-12));
  EXPECT_NE(s.rotation, 0.0);
  EXPECT_LT(max_diff(rotate_target(compose(f, s.source), s.rotation), s.jet, 4), 1e-12);
}

TEST(NormalForm, ReduceRandomGerms) {
  std::mt19937_64 rng(31);
  for (const MD& f : random_recognized(rng, 100, Verdict::Sharksfin)) {
    const NormalFormStage s = reduce_to_uv_form(f);
    EXPECT_TRUE(first_is_uv(s.jet, 1e-9));
    EXPECT_LT(max_diff(rotate_target(compose(f, s.source), s.rotation), s.jet, 4), 1e-9);
  }
}

TEST(NormalForm, ReduceRejectsDegenerate) {
  EXPECT_THROW(reduce_to_uv_form(germ(4, {{1, 2, 0, 1}, {2, 2, 0, 1}})), DegenerateHessianError);
}

TEST(NormalForm, MixedQuadraticCot) {
  const auto r = mixed_quadratic_cot(1.0, 1.0, 1.0);
  EXPECT_NEAR(r.plus, (-1.0 + std::sqrt(5.0)) / 2.0, 1e-15);
  EXPECT_NEAR(r.minus, -1.0 / r.plus, 1e-15);
  // B t^2 + (1 - B^2 + AC) t - B = 0 for both roots
  for (double A : {-2.0, 0.5, 3.0})
    for (double B : {-1.5, 0.25, 2.0})
      for (double C : {-1.0, 0.75}) {
        const auto s = mixed_quadratic_cot(A, B, C);
        for (double t : {s.plus, s.minus}) EXPECT_NEAR(B * t * t + (1 - B * B + A * C) * t - B, 0.0, 1e-12);
      }
  EXPECT_THROW(mixed_quadratic_cot(1.0, 0.0, 1.0), std::invalid_argument);
}

TEST(NormalForm, EliminateMixedQuadraticExample) {
  NormalFormStage s(germ(4, {{1, 1, 1, 1}, {2, 2, 0, 0.5}, {2, 1, 1, 1}, {2, 0, 2, 0.5}, {2, 3, 0, 0.3}}));
  EXPECT_TRUE(eliminate_mixed_quadratic(s));
  EXPECT_LT(std::abs(s.jet.second.coeff(1, 1)), 1e-9);
  EXPECT_TRUE(first_is_uv(s.jet, 1e-9));
}

TEST(NormalForm, EliminateIsIdentityWithoutMixedTerm) {
  const MD f = germ(4, {{1, 1, 1, 1}, {2, 2, 0, 0.5}, {2, 0, 2, 0.5}, {2, 3, 0, 0.3}});
  NormalFormStage s(f);
  EXPECT_FALSE(eliminate_mixed_quadratic(s));
  EXPECT_LT(max_diff(s.jet, f, 4), 1e-15);
  EXPECT_TRUE(s.log.empty());
}

TEST(NormalForm, EliminateGrid) {
  for (double a20 = -2.0; a20 <= 2.0; a20 += 0.5) {
    for (double a11 = -2.0; a11 <= 2.0; a11 += 0.5) {
      if (a20 == 0.0) continue;
      for (double c = -1.0; c <= 1.0; c += 2.0) {
        const double A = a20, C = c * a20;
        NormalFormStage s(germ(4, {{1, 1, 1, 1}, {2, 2, 0, A / 2}, {2, 1, 1, a11}, {2, 0, 2, C / 2}}));
        try {
          eliminate_mixed_quadratic(s);
        } catch (const DegenerateHessianError&) {
          continue;  // degenerate identifier, no normal form
        }
        EXPECT_LT(std::abs(s.jet.second.coeff(1, 1)), 1e-9) << a20 << ' ' << a11 << ' ' << c;
        EXPECT_TRUE(first_is_uv(s.jet, 1e-9));
      }
    }
  }
}

TEST(NormalForm, KillMixedCubicsAlreadyNormal) {
  const MD f = germ(4, {{1, 1, 1, 1}, {2, 2, 0, 0.5}, {2, 0, 2, 0.5}, {2, 3, 0, 1.0 / 6}, {2, 0, 3, 1.0 / 6}});
  const So2NormalForm nf = kill_mixed_cubics(NormalFormStage(f));
  EXPECT_NEAR(nf.a20, 1.0, 1e-12);
  EXPECT_EQ(nf.eps1, 1);
  EXPECT_EQ(nf.eps2, 1);
  EXPECT_NEAR(nf.a30, 1.0, 1e-12);
  EXPECT_NEAR(nf.a03, 1.0, 1e-12);
}

TEST(NormalForm, KillMixedCubicsShift) {
  const MD f = germ(4, {{1, 1, 1, 1}, {2, 2, 0, 0.5}, {2, 0, 2, 0.5}, {2, 2, 1, 0.5}});
  const So2NormalForm nf = kill_mixed_cubics(NormalFormStage(f));
  EXPECT_NEAR(nf.a20, 1.0, 1e-12);
  EXPECT_NEAR(nf.a30, 0.0, 1e-12);
  EXPECT_NEAR(nf.a03, 3.0, 1e-12);
  EXPECT_NEAR(nf.jet.second.coeff(2, 1), 0.0, 1e-12);
  EXPECT_NEAR(nf.jet.second.coeff(1, 2), 0.0, 1e-12);
}

TEST(NormalForm, RoundTripRandom) {
  std::mt19937_64 rng(32);
  auto seeds = random_recognized(rng, 150, Verdict::Sharksfin);
  const auto deltoids = random_recognized(rng, 150, Verdict::Deltoid);
  seeds.insert(seeds.end(), deltoids.begin(), deltoids.end());
  for (const MD& f : seeds) {
    const So2NormalForm nf = so2_normal_form(f);
    EXPECT_GT(nf.a20, 0.0);
    EXPECT_FALSE(nf.eps1 == -1 && nf.eps2 == -1);
    const MD g = rotate_target(compose(f, nf.source), nf.rotation);
    EXPECT_LT(max_diff(g, nf.model(4), 3), 1e-8);
    EXPECT_LT(max_diff(g, nf.jet, 4), 1e-8);
    // residual holds exactly the terms of degree 4
    EXPECT_LT(max_diff(nf.residual, MD{nf.jet.first.tail_from(4), nf.jet.second.tail_from(4)}, 4), 1e-12);
  }
}

TEST(NormalForm, VerdictConsistency) {
  std::mt19937_64 rng(33);
  for (Verdict v : {Verdict::Sharksfin, Verdict::Deltoid}) {
    for (const MD& f : random_recognized(rng, 100, v)) {
      const So2NormalForm nf = so2_normal_form(f);
      EXPECT_EQ(nf.sharksfin(), v == Verdict::Sharksfin);
      EXPECT_EQ(classify_germ(to_complex(nf.model(4))).verdict, v);
    }
  }
}

TEST(NormalForm, RejectsDegenerateInputs) {
  EXPECT_THROW(so2_normal_form(germ(4, {{1, 1, 0, 1}, {2, 0, 2, 1}})), NotRankZeroError);
  EXPECT_THROW(so2_normal_form(germ(4, {{1, 2, 0, 1}, {2, 2, 0, 1}})), DegenerateHessianError);
  EXPECT_THROW(so2_normal_form(germ(2, {{1, 1, 1, 1}, {2, 2, 0, 1}, {2, 0, 2, 1}})), JetError);
}

TEST(NormalForm, InvariantExamples) {
  So2NormalForm nf;
  nf.a20 = 1.0;
  nf.a30 = 1.0;
  nf.a03 = 0.0;
  auto inv = so2_invariants(nf);
  EXPECT_NEAR(inv.kappa_plus, 2.0 / std::pow(8.0, 1.25), 1e-15);
  EXPECT_NEAR(inv.kappa_plus, 0.1486509, 1e-7);
  EXPECT_NEAR(inv.kappa_minus, -0.1486509, 1e-7);
  EXPECT_NEAR(inv.theta_gamma, std::numbers::pi / 2, 1e-15);

  nf.a03 = 1.0;
  inv = so2_invariants(nf);
  EXPECT_NEAR(inv.kappa_minus, 0.0, 1e-15);
  const MD model = nf.model(4);
  EXPECT_EQ(classify_germ(to_complex(model)).verdict, Verdict::NotRecognized);

  nf.a30 = nf.a03 = 0.0;
  inv = so2_invariants(nf);
  EXPECT_EQ(inv.kappa_plus, 0.0);
  EXPECT_EQ(inv.kappa_minus, 0.0);

  nf.eps2 = -1;
  EXPECT_THROW(so2_invariants(nf), std::domain_error);
}

TEST(NormalForm, PipelineMatchesDirectInvariants) {
  std::mt19937_64 rng(34);
  for (const MD& seed : random_recognized(rng, 60, Verdict::Sharksfin)) {
    const MD f = oracle::random_so2_conjugate(seed, rng);
    const auto a = so2_invariants(so2_normal_form(f)).canonical();
    const auto b = direct_cusp_invariants(f).canonical();
    EXPECT_NEAR(a.kappa_plus, b.kappa_plus, 1e-9);
    EXPECT_NEAR(a.kappa_minus, b.kappa_minus, 1e-9);
    EXPECT_NEAR(a.theta_gamma, b.theta_gamma, 1e-9);
  }
}

TEST(NormalForm, InvariantsUnderRotationAndPositiveSourceChanges) {
  std::mt19937_64 rng(35);
  for (const MD& seed : random_recognized(rng, 40, Verdict::Sharksfin)) {
    const auto base = so2_invariants(so2_normal_form(seed)).canonical();
    for (int k = 0; k < 3; ++k) {
      const auto moved = so2_invariants(so2_normal_form(oracle::random_so2_conjugate(seed, rng))).canonical();
      EXPECT_NEAR(moved.kappa_plus, base.kappa_plus, 1e-8);
      EXPECT_NEAR(moved.kappa_minus, base.kappa_minus, 1e-8);
      EXPECT_NEAR(moved.theta_gamma, base.theta_gamma, 1e-8);
    }
  }
}

TEST(NormalForm, RotatedCopyKeepsInvariants) {
  const MD f = germ(4, {{1, 1, 1, 1}, {2, 2, 0, 0.5}, {2, 0, 2, 0.5}, {2, 3, 0, 1.0 / 6}, {2, 0, 3, 0.5}});
  const auto a = so2_invariants(so2_normal_form(f)).canonical();
  const auto b = so2_invariants(so2_normal_form(rotate_target(f, 0.7))).canonical();
  EXPECT_NEAR(a.kappa_plus, b.kappa_plus, 1e-12);
  EXPECT_NEAR(a.kappa_minus, b.kappa_minus, 1e-12);
  EXPECT_NEAR(a.theta_gamma, b.theta_gamma, 1e-12);
}

TEST(NormalForm, InvertSource) {
  const MD phi = germ(4, {{1, 1, 0, 2}, {1, 0, 1, 1}, {1, 2, 0, 0.5}, {2, 0, 1, 1}, {2, 1, 1, -0.25}});
  const MD inv = invert_source(phi);
  EXPECT_LT(max_diff(compose(phi, inv), MD::identity(4), 4), 1e-12);
  EXPECT_LT(max_diff(compose(inv, phi), MD::identity(4), 4), 1e-12);
}
