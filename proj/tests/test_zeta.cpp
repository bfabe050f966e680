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

#include <numeric>

#include "shimbelyi/zeta/area.hpp"

namespace shimbelyi {
namespace {

TEST(Character, ValuesSumToZero) {
  for (long f : {7, 9, 13}) {
    auto chi = cubic_character(f);
    CycloElem sum(0);
    for (long a = 0; a < f; ++a) sum += chi(a);
    EXPECT_TRUE(sum.is_zero()) << f;
    EXPECT_FALSE(chi.is_trivial());
    EXPECT_TRUE(chi(0).is_zero());
  }
}

TEST(Character, Multiplicative) {
  for (long f : {7, 9, 13}) {
    auto chi = cubic_character(f);
    for (long a = 1; a < f; ++a)
      for (long b = 1; b < f; ++b) EXPECT_EQ(chi(a * b), chi(a) * chi(b)) << f << " " << a << " " << b;
  }
}

TEST(Character, NonGeneratorRejected) {
  EXPECT_THROW(cubic_character(7, 2), std::invalid_argument);
  EXPECT_THROW(cubic_character(11), UnsupportedConductor);
}

TEST(Bernoulli, ConjugateCharacterGivesConjugateValue) {
  for (long f : {7, 9, 13}) {
    auto chi = cubic_character(f);
    EXPECT_EQ(gen_bernoulli_2(chi.conjugate()), gen_bernoulli_2(chi).conjugate());
  }
}

TEST(Bernoulli, TrivialCharacterRejected) {
  CharacterData triv{7, std::vector<CycloElem>(7, CycloElem(1))};
  triv.values[0] = CycloElem(0);
  EXPECT_THROW(gen_bernoulli_2(triv), std::invalid_argument);
}

TEST(Area, CubicFields) {
  EXPECT_EQ(shimizu_area(7).area, Rational(1, 42));
  EXPECT_EQ(shimizu_area(9).area, Rational(1, 18));
  EXPECT_EQ(shimizu_area(13).area, Rational(1, 6));
  EXPECT_EQ(shimizu_area(7).zeta_minus1, Rational(-1, 21));
}

TEST(Area, OrbifoldFormula) {
  EXPECT_EQ(orbifold_area(0, {2, 3, 7}).area, Rational(1, 42));
  EXPECT_EQ(orbifold_area(0, {2, 3, 9}).area, Rational(1, 18));
  EXPECT_EQ(orbifold_area(0, {2, 2, 2, 3}).area, Rational(1, 6));
  EXPECT_TRUE(orbifold_area(0, {2, 3, 7}).hyperbolic);
  auto torus = orbifold_area(1, {});
  EXPECT_EQ(torus.area, Rational(0));
  EXPECT_FALSE(torus.hyperbolic);
  EXPECT_FALSE(orbifold_area(0, {2, 3, 6}).hyperbolic);
  EXPECT_THROW(orbifold_area(0, {1, 3}), std::invalid_argument);
}

TEST(Area, MatchesOrbifoldOfTriangleGroups) {
  EXPECT_EQ(shimizu_area(7).area, orbifold_area(0, {2, 3, 7}).area);
  EXPECT_EQ(shimizu_area(9).area, orbifold_area(0, {2, 3, 9}).area);
  EXPECT_EQ(shimizu_area(13).area, orbifold_area(0, {2, 2, 2, 3}).area);
}

}  // namespace
}  // namespace shimbelyi
