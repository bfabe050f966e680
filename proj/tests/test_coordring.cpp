// Copyright 2026 The shimbelyi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "shimbelyi/coordring/coordring.hpp"
#include "shimbelyi/cover/theorem1_data.hpp"
#include "support/properties.hpp"

namespace shimbelyi {
namespace {

using E = CoordRingElem<Rational>;

CurvePtr<Rational> short_curve() { return share(QCurve::short_form(9, 1)); }

TEST(CoordRing, DegreesOfMonomials) {
  auto c = short_curve();
  EXPECT_EQ(E::x(c).degree(), 2);
  EXPECT_EQ(E::y(c).degree(), 3);
  EXPECT_EQ((E::x(c) * E::y(c)).degree(), 5);
  EXPECT_EQ(E::constant(c, 7).degree(), 0);
  EXPECT_EQ(E(c).degree(), E::kDegreeOfZero);
  EXPECT_EQ(pow(E::y(c), 2), E(c, QPoly{1, 9, 0, 1}));
}

TEST(CoordRing, DegreeAdditivityProperty) {
  auto t = testing::degree_additivity();
  EXPECT_GE(t.cases, 100);
  EXPECT_EQ(t.held, t.cases);
}

TEST(CoordRing, ParentsMustAgree) {
  auto a = short_curve(), b = share(QCurve::short_form(1, 1));
  EXPECT_THROW(E::x(a) + E::x(b), ParentMismatch);
  EXPECT_NO_THROW(E::x(a) * E::y(short_curve()));
}

TEST(CoordRing, EvaluationMatchesPointArithmetic) {
  auto c = share(QCurve(0, 0, 1, -1, 0));
  E f = E::x(c) * E::y(c) + Rational(3) * E::x(c);
  QPoint p = scalar_multiple(*c, 5, QPoint(Rational(0), Rational(0)));
  EXPECT_EQ(f(p.x(), p.y()), p.x() * p.y() + 3 * p.x());
  EXPECT_EQ((f * f)(p.x(), p.y()), f(p.x(), p.y()) * f(p.x(), p.y()));
}

TEST(Derivation, ConventionsOnShortModel) {
  auto c = short_curve();
  EXPECT_EQ(derive(E::x(c), {DerivationConvention::kHalf}), E::y(c));
  EXPECT_EQ(derive(E::y(c), {DerivationConvention::kHalf}), E(c, QPoly{Rational(9, 2), 0, Rational(3, 2)}));
  EXPECT_EQ(derive(E::x(c)), Rational(2) * E::y(c));
  EXPECT_EQ(derive(E::constant(c, 5)), E(c));
}

TEST(Derivation, GeneralModel) {
  auto c = share(QCurve(1, 2, 3, 4, 5));
  // x' = 2y + a1 x + a3, y' = 3x^2 + 2 a2 x + a4 - a1 y
  EXPECT_EQ(derive(E::x(c)), E(c, QPoly{3, 1}, QPoly{2}));
  EXPECT_EQ(derive(E::y(c)), E(c, QPoly{4, 4, 3}, QPoly{-1}));
}

TEST(Derivation, LeibnizProperty) {
  auto t = testing::leibniz_rule();
  EXPECT_GE(t.cases, 100);
  EXPECT_EQ(t.held, t.cases);
}

TEST(Derivation, InvariantDifferentialAnnihilatesCurveEquation) {
  // d/dw of y^2 + a1 xy + a3 y - F(x) must vanish identically.
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    auto c = share(testing::random_curve(rng));
    E x = E::x(c), y = E::y(c);
    E lhs = Rational(2) * y * derive(y) + c->a1() * (derive(x) * y + x * derive(y)) + c->a3() * derive(y);
    E rhs = E(c, c->rhs().derivative()) * derive(x);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Derivation, ResiduesModTwentyNine) {
  auto c = share(modp29::curve());
  auto x = CoordRingElem<ResidueInt>::x(c);
  auto y = CoordRingElem<ResidueInt>::y(c);
  EXPECT_EQ(derive(x, {DerivationConvention::kHalf}), y);
  EXPECT_EQ(derive(x * y), derive(x) * y + x * derive(y));
}

TEST(Involution, NegationPullbackAndSplit) {
  auto c = share(QCurve(0, 1, 1, -44704, -3655907));
  E f = theorem1::f4(c);
  E g = neg_pullback(f);
  EXPECT_EQ(neg_pullback(g), f);
  auto split = odd_even_split(f);
  EXPECT_EQ(split.even + split.odd, f);
  EXPECT_EQ(neg_pullback(split.even), split.even);
  EXPECT_EQ(neg_pullback(split.odd), -split.odd);
  EXPECT_EQ(norm(f), (f * g).u());
  EXPECT_TRUE((f * g).v().is_zero());
}

TEST(CommonZeros, DetectsSharedPoint) {
  auto c = short_curve();  // (0, 1) lies on y^2 = x^3 + 9x + 1
  E a = E::x(c), b = E::y(c) - E::constant(c, 1);
  EXPECT_EQ(common_zeros(a, b), QPoly({0, 1}));
  E d = E::y(c) + E::constant(c, 1);  // vanishes at (0, -1) only
  EXPECT_EQ(common_zeros(b, d).degree(), 0);
}

TEST(Proportionality, BuildF14OnReferenceData) {
  auto c = share(theorem1::curve());
  E f14 = build_f14(theorem1::f4(c), theorem1::f9(c));
  auto w = proportionality(f14, theorem1::f14(c));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->holds());
  EXPECT_EQ(w->lambda, Rational(-1));
}

TEST(TransformFunction, PullbackAlongModelMap) {
  auto c = share(QCurve::short_form(-1296, 0));
  auto m = minimal_model(*c);
  auto target = share(m.curve);
  E f = E::x(c) + Rational(2) * E::y(c);
  E g = transform_function(f, m.map, target);
  // (x, y) = (u^2 X + r, u^3 Y + s u^2 X + t)
  QPoint p(Rational(0), Rational(0));
  QPoint q = transform_point(p, m.map);
  EXPECT_EQ(g(q.x(), q.y()), f(p.x(), p.y()));
  QPoint p2(Rational(-36), Rational(0));
  QPoint q2 = transform_point(p2, m.map);
  EXPECT_EQ(g(q2.x(), q2.y()), f(p2.x(), p2.y()));
}

}  // namespace
}  // namespace shimbelyi
