#include <gtest/gtest.h>

#include <random>

#include "corank2/jets.hpp"
#include "oracle.hpp"

using namespace corank2;
using J = Jet2<QuadScalar>;
using M = MapJet2<QuadScalar>;

namespace {

J mono(int n, int i, int j, const Rational& c) { return J::monomial(n, i, j, QuadScalar(c)); }
J one(int n) { return J::constant(n, 1); }

}  // namespace

TEST(Jets, SeriesMulExamples) {
  EXPECT_EQ((one(2) + J::u(2)) * (one(2) - J::u(2)), one(2) - mono(2, 2, 0, 1));
  EXPECT_TRUE((J::u(1) * J::v(1)).is_zero());
  const J s = J::u(3) + J::v(3);
  EXPECT_EQ(s * s, mono(3, 2, 0, 1) + mono(3, 1, 1, 2) + mono(3, 0, 2, 1));
}

TEST(Jets, OrderMismatchThrows) {
  EXPECT_THROW(J::u(2) * J::u(3), JetError);
  EXPECT_THROW(compose(J::u(2), M::identity(3)), JetError);
}

TEST(Jets, ComposeExamples) {
  const int n = 3;
  const J sq = mono(n, 2, 0, 1);
  EXPECT_EQ(compose(sq, M{J::u(n) + J::v(n), J::v(n)}), mono(n, 2, 0, 1) + mono(n, 1, 1, 2) + mono(n, 0, 2, 1));
  EXPECT_EQ(compose(mono(n, 1, 1, 1), M{J::v(n), -J::u(n)}), mono(n, 1, 1, -1));
}

TEST(Jets, ComposeRejectsConstantInner) {
  EXPECT_THROW(compose(J::u(2), M{one(2) + J::u(2), J::v(2)}), JetError);
}

TEST(Jets, ElementaryExamples) {
  EXPECT_EQ(elementary(ElementaryKind::Cos, mono(4, 2, 0, 1)), one(4) - mono(4, 4, 0, Rational(1, 2)));
  EXPECT_EQ(elementary(ElementaryKind::Sin, J::u(2) + J::v(2)), J::u(2) + J::v(2));
  const J geo = one(3) + J::u(3) + mono(3, 2, 0, 1) + mono(3, 3, 0, 1);
  EXPECT_EQ(elementary(ElementaryKind::Inverse, one(3) - J::u(3)), geo);
  const J s = elementary(ElementaryKind::Sqrt, J::constant(4, 4) + J::u(4));
  EXPECT_EQ(s * s, J::constant(4, 4) + J::u(4));
}

TEST(Jets, ElementaryPreconditions) {
  EXPECT_THROW(elementary(ElementaryKind::Sin, one(2)), JetError);
  EXPECT_THROW(elementary(ElementaryKind::Inverse, J::u(2)), JetError);
  // the constant 2 has its root in Q(sqrt 2), which the exact scalar can carry
  const J r = elementary(ElementaryKind::Sqrt, J::constant(3, 2) + J::u(3));
  EXPECT_EQ(r * r, J::constant(3, 2) + J::u(3));
}

TEST(Jets, PartialDerivativeExamples) {
  EXPECT_EQ(mono(3, 2, 1, 1).partial_u(), mono(2, 1, 1, 2));
  EXPECT_EQ(mono(3, 1, 1, 1).partial_v(), mono(2, 1, 0, 1));
  EXPECT_TRUE(J::constant(3, 5).partial_u().is_zero());
  EXPECT_EQ(J::u(3).partial_u().order(), 2);
}

TEST(Jets, DirectionalIterateExamples) {
  const int n = 4;
  const M f{mono(n, 1, 1, 1), mono(n, 2, 0, Rational(1, 2)) + mono(n, 0, 2, Rational(1, 2))};
  EXPECT_EQ(directional_iterate(f, Vec2<QuadScalar>{1, 1}, 2), (Vec2<QuadScalar>{2, 2}));
  const M g{f.first, f.second + mono(n, 3, 0, Rational(1, 6))};
  EXPECT_EQ(directional_iterate(g, Vec2<QuadScalar>{1, 1}, 3), (Vec2<QuadScalar>{0, 1}));
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(directional_iterate(g, Vec2<QuadScalar>{0, 0}, k), (Vec2<QuadScalar>{0, 0}));
  EXPECT_THROW(directional_iterate(g, Vec2<QuadScalar>{1, 0}, 5), JetError);
}

TEST(Jets, DirectionalIterateMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const M f = oracle::random_germ(4, rng, 1, 4, 3);
    const Vec2<QuadScalar> eta{oracle::random_rational(rng, 3, 2), oracle::random_rational(rng, 3, 2)};
    const int k = 1 + trial % 4;
    const auto want = oracle::brute_force_iterate(f, J::constant(4, eta[0]), J::constant(4, eta[1]), k);
    EXPECT_EQ(directional_iterate(f, eta, k), want);
  }
}

TEST(Jets, VectorFieldIterateMatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const M f = oracle::random_germ(4, rng, 1, 3, 2);
    const VectorFieldJet<QuadScalar> xi{oracle::random_jet(4, rng, 0), oracle::random_jet(4, rng, 0)};
    const int k = 1 + trial % 4;
    EXPECT_EQ(vector_field_iterate(f, xi, k), oracle::brute_force_iterate(f, xi.a, xi.b, k));
  }
}

TEST(Jets, CurveComposition) {
  // (u^2, v) along t -> (t, t^2) gives (t^2, t^2)
  const int n = 3;
  const M f{mono(n, 2, 0, 1), J::v(n)};
  const CurveJet<QuadScalar> c{Series1<QuadScalar>(n, {0, 1}), Series1<QuadScalar>(n, {0, 0, 1})};
  const CurveJet<QuadScalar> img = compose(f, c);
  EXPECT_EQ(img.derivative_at_zero(2), (Vec2<QuadScalar>{2, 2}));
  EXPECT_EQ(img.derivative_at_zero(1), (Vec2<QuadScalar>{0, 0}));
}

TEST(Jets, RingLawsSmallSample) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const J a = oracle::random_jet(n, rng, 0), b = oracle::random_jet(n, rng, 0), c = oracle::random_jet(n, rng, 0);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Jets, ChainRuleSmallSample) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const J a = oracle::random_jet(n, rng, 0);
    const M g = oracle::random_germ(n, rng, 1);
    const J lhs = compose(a, g).partial_u();
    const J rhs = compose(a.partial_u().padded(n), g).truncated(n - 1) * g.first.partial_u() +
                  compose(a.partial_v().padded(n), g).truncated(n - 1) * g.second.partial_u();
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Jets, TruncationHelpers) {
  const J a = J::u(4) + mono(4, 2, 1, 3) + mono(4, 4, 0, 1);
  EXPECT_EQ(a.valuation(), 1);
  EXPECT_EQ(a.homogeneous_part(3), mono(4, 2, 1, 3));
  EXPECT_EQ(a.truncated(2).order(), 2);
  EXPECT_EQ(a.truncated(2).padded(4), J::u(4));
  EXPECT_EQ(a.tail_from(3), mono(4, 2, 1, 3) + mono(4, 4, 0, 1));
}
