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

#include "shimbelyi/curve/genus2.hpp"
#include "shimbelyi/curve/minimal.hpp"
#include "support/properties.hpp"

namespace shimbelyi {
namespace {

TEST(Weierstrass, SingularModelRejected) {
  EXPECT_THROW(QCurve::make(0, 0, 0, 0, 0), SingularCurve);
  EXPECT_THROW(QCurve::short_form(-3, 2), SingularCurve);  // x^3 - 3x + 2 = (x-1)^2 (x+2)
  EXPECT_NO_THROW(QCurve::make(0, 1, 1, -44704, -3655907));
}

TEST(Weierstrass, InvariantsOfSmallCurve) {
  QCurve e(0, 0, 1, -1, 0);  // conductor 37
  EXPECT_EQ(e.discriminant(), Rational(37));
  EXPECT_EQ(e.c4(), Rational(48));
  EXPECT_EQ(e.c6(), Rational(-216));
  EXPECT_EQ(e.j_invariant(), Rational(110592, 37));
}

TEST(GroupLaw, ThreeTorsionOnDegreeNineModel) {
  QCurve c(15, 0, 128, 0, 0);
  QPoint q0(Rational(0), Rational(-128)), origin(Rational(0), Rational(0));
  ASSERT_TRUE(on_curve(c, q0));
  ASSERT_TRUE(on_curve(c, origin));
  EXPECT_EQ(group_law(c, q0, q0), origin);
  EXPECT_EQ(point_order(c, q0, 20), 3);
  EXPECT_EQ(point_order(c, origin, 20), 3);
  EXPECT_TRUE(group_law(c, q0, origin).is_infinity());
}

TEST(GroupLaw, MultiplesOnRankOneCurve) {
  QCurve e(0, 0, 1, -1, 0);
  QPoint g(Rational(0), Rational(0));
  EXPECT_EQ(scalar_multiple(e, 2, g), QPoint(Rational(1), Rational(0)));
  EXPECT_EQ(scalar_multiple(e, 3, g), QPoint(Rational(-1), Rational(-1)));
  EXPECT_EQ(scalar_multiple(e, 5, g), QPoint(Rational(1, 4), Rational(-5, 8)));
  EXPECT_EQ(scalar_multiple(e, -3, g), negate(e, scalar_multiple(e, 3, g)));
  EXPECT_FALSE(point_order(e, g, 50).has_value());
}

TEST(GroupLaw, AssociativityProperty) {
  auto t = testing::associativity();
  EXPECT_GE(t.cases, 100);
  EXPECT_EQ(t.held, t.cases);
}

TEST(ModelMaps, TransformRoundTripAndInvariance) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    QCurve c = testing::random_curve(rng);
    QModelMap m{make_rational(Integer(testing::uniform(rng, 1, 5) * (i % 2 ? 1 : -1)), Integer(testing::uniform(rng, 1, 3))),
                testing::random_rational(rng, 5), testing::random_rational(rng, 5), testing::random_rational(rng, 5)};
    QCurve d = transform(c, m);
    EXPECT_EQ(d.j_invariant(), c.j_invariant());
    EXPECT_EQ(transform(d, m.inverse_map()), c);
    EXPECT_EQ(transform(c, m.then(m.inverse_map())), c);
    QPoint p = testing::uniform(rng, 0, 1) ? QPoint::infinity() : QPoint(Rational(0), Rational(0));
    if (!p.is_infinity() && !on_curve(c, p)) continue;
    EXPECT_TRUE(on_curve(d, transform_point(p, m)));
  }
}

TEST(MinimalModel, KnownModels) {
  EXPECT_EQ(minimal_model(QCurve(0, 1, 1, -44704, -3655907)).curve, QCurve(0, 1, 1, -44704, -3655907));
  EXPECT_EQ(minimal_model(QCurve(1, -1, 1, -95, -697)).curve, QCurve(1, -1, 1, -95, -697));
  auto m = minimal_model(QCurve::short_form(-1296, 0));
  EXPECT_EQ(m.curve, QCurve(0, 0, 0, -1, 0));
  EXPECT_EQ(m.map.u, Rational(6));
  EXPECT_EQ(minimal_model(QCurve(15, 0, 128, 0, 0)).curve, QCurve(1, -1, 1, -95, -697));
}

TEST(MinimalModel, RationalInputIsScaledAndMapIsConsistent) {
  QCurve c(Rational(1, 2), 0, 0, Rational(1, 16), 0);
  auto m = minimal_model(c);
  EXPECT_EQ(transform(c, m.map), m.curve);
  for (const auto& a : m.curve.a_invariants()) EXPECT_EQ(a.get_den(), 1);
  EXPECT_EQ(m.curve.j_invariant(), c.j_invariant());
}

TEST(PointCounting, AgreesWithBruteForceAndHasse) {
  auto t = testing::hasse_bounds();
  EXPECT_GE(t.cases, 100);
  EXPECT_EQ(t.held, t.cases);
}

TEST(PointCounting, BadPrimeRaises) {
  EXPECT_THROW(count_points_modp(QCurve(0, 1, 1, -114, 473), 7), BadReduction);
  EXPECT_THROW(count_points_modp(QCurve(0, 1, 1, -114, 473), 9), std::invalid_argument);
}

TEST(PointCounting, IsogenousCurvesAtFive) {
  const QCurve a(0, 1, 1, -114, 473), b(0, 1, 1, -44704, -3655907);
  EXPECT_EQ(count_points_modp(a, 5), testing::brute_force_count(a, 5));
  EXPECT_EQ(count_points_modp(a, 5), count_points_modp(b, 5));
}

TEST(Genus2, ThreeCycleCaseStudy) {
  auto r = genus2_threecycle_check();
  EXPECT_TRUE(r.sextic_invariant);
  EXPECT_TRUE(r.order_three);
  EXPECT_TRUE(r.orbit_of_zero);
  EXPECT_TRUE(r.point_on_curve);
}

}  // namespace
}  // namespace shimbelyi
