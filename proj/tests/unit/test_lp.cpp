#include <gtest/gtest.h>

#include "infoatoms/lp.hpp"

using namespace infoatoms;

namespace {

LpRow row(LinearForm terms, Sense sense, Rational rhs) { return {std::move(terms), sense, std::move(rhs)}; }

const std::optional<Rational> kZero = Rational(0);

}  // namespace

TEST(ExactSimplex, SmallBoundedProgram) {
  // x + y <= 4, x + 3y <= 6, x, y >= 0
  ExactSimplex lp(2, {row({{0, 1}, {1, 1}}, Sense::LessEqual, 4), row({{0, 1}, {1, 3}}, Sense::LessEqual, 6)},
                  {kZero, kZero});
  ASSERT_TRUE(lp.feasible());
  EXPECT_EQ(*lp.maximize({{0, 3}, {1, 2}}), Rational(12));
  EXPECT_EQ(*lp.maximize({{0, 1}, {1, 3}}), Rational(6));
  EXPECT_EQ(*lp.maximize({{1, 1}}), Rational(2));
  EXPECT_EQ(*lp.minimize({{0, 1}}), Rational(0));
  const auto p = lp.point();
  EXPECT_LE(p[0] + p[1], 4);
}

TEST(ExactSimplex, ExactFractionalOptimum) {
  // 3x + 2y = 1, x, y >= 0: max x = 1/3
  ExactSimplex lp(2, {row({{0, 3}, {1, 2}}, Sense::Equal, 1)}, {kZero, kZero});
  ASSERT_TRUE(lp.feasible());
  EXPECT_EQ(*lp.maximize({{0, 1}}), Rational(1, 3));
  EXPECT_EQ(*lp.maximize({{1, 1}}), Rational(1, 2));
}

TEST(ExactSimplex, Infeasible) {
  ExactSimplex lp(1, {row({{0, 1}}, Sense::GreaterEqual, 2), row({{0, 1}}, Sense::LessEqual, 1)}, {kZero});
  EXPECT_FALSE(lp.feasible());
}

TEST(ExactSimplex, UnboundedAndFreeVariables) {
  ExactSimplex lp(2, {row({{0, 1}, {1, -1}}, Sense::Equal, 0)}, {std::nullopt, std::nullopt});
  ASSERT_TRUE(lp.feasible());
  EXPECT_FALSE(lp.maximize({{0, 1}}));
  EXPECT_FALSE(lp.minimize({{1, 1}}));
  EXPECT_EQ(*lp.minimize({{0, 1}, {1, -1}}), Rational(0));
}

TEST(ExactSimplex, NegativeFreeOptimum) {
  // x free, x >= -5/2
  ExactSimplex lp(1, {row({{0, 1}}, Sense::GreaterEqual, Rational(-5, 2))}, {std::nullopt});
  ASSERT_TRUE(lp.feasible());
  EXPECT_EQ(*lp.minimize({{0, 1}}), Rational(-5, 2));
}

TEST(ExactSimplex, RedundantEqualitiesAreTolerated) {
  ExactSimplex lp(3,
                  {row({{0, 1}, {1, 1}}, Sense::Equal, 1), row({{1, 1}, {2, 1}}, Sense::Equal, 1),
                   row({{0, 1}, {1, 2}, {2, 1}}, Sense::Equal, 2)},
                  {kZero, kZero, kZero});
  ASSERT_TRUE(lp.feasible());
  EXPECT_EQ(*lp.maximize({{1, 1}}), Rational(1));
  EXPECT_EQ(*lp.maximize({{0, 1}, {2, 1}}), Rational(2));
}

TEST(ExactSimplex, NonzeroLowerBounds) {
  ExactSimplex lp(2, {row({{0, 1}, {1, 1}}, Sense::LessEqual, 3)}, {Rational(1), Rational(1)});
  ASSERT_TRUE(lp.feasible());
  EXPECT_EQ(*lp.maximize({{0, 1}}), Rational(2));
  EXPECT_EQ(*lp.minimize({{0, 1}, {1, 1}}), Rational(2));
}
