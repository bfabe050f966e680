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

#include <map>
#include <random>

#include "shimbelyi/cover/cover239.hpp"
#include "shimbelyi/cover/pipeline.hpp"
#include "shimbelyi/cover/ramification.hpp"
#include "shimbelyi/cover/triple.hpp"
#include "support/properties.hpp"

namespace shimbelyi {
namespace {

using E = CoordRingElem<Rational>;

CoverSolution<Rational> reference_solution() {
  auto c = share(theorem1::curve());
  return {"Q", c, theorem1::f4(c), theorem1::f9(c), theorem1::f14(c), theorem1::alpha(), theorem1::beta()};
}

TEST(Ramification, RiemannHurwitz) {
  EXPECT_EQ(rh_genus(parse_profile("28:2^14|3^9,1|7^4")), 1);
  EXPECT_EQ(rh_genus(parse_profile("9:3^3|2^4,1|9")), 1);
  EXPECT_EQ(rh_genus(parse_profile("9:3^3|2^4,1|2^4,1|2^4,1")), 1);
  EXPECT_EQ(rh_genus(parse_profile("2:2|2")), 0);
}

TEST(Ramification, MalformedProfiles) {
  EXPECT_THROW(parse_profile("28:2^13|3^9,1|7^4"), ProfileError);
  EXPECT_THROW(parse_profile("28 2^14"), ProfileError);
  EXPECT_THROW(parse_profile("9:3^x|9"), ProfileError);
  EXPECT_THROW(parse_profile("3:2|2"), ProfileError);  // sums to 2, and the total is odd anyway
}

TEST(Ramification, PartitionRoundTrip) {
  auto p = parse_profile("28:7^4|2^14|1,3^9");
  EXPECT_EQ(partition_string(p.partitions[2]), "3^9,1");
  EXPECT_EQ(partition_string(p.partitions[0]), "7^4");
}

TEST(Ramification, HurwitzGenus) {
  EXPECT_EQ(hurwitz_genus_from_group_order(168), Rational(3));
  EXPECT_EQ(hurwitz_genus_from_group_order(504), Rational(7));
  EXPECT_EQ(hurwitz_genus_from_group_order(9828), Rational(118));
}

TEST(Monodromy, PermutationHelpers) {
  Perm a{1, 2, 0, 3}, b{0, 1, 3, 2};
  EXPECT_TRUE(is_identity(compose(a, inverse_perm(a))));
  EXPECT_EQ(cycle_type(compose(a, b)), (std::vector<long>{4}));
  EXPECT_EQ(cycle_type(a), (std::vector<long>{3, 1}));
}

TEST(Monodromy, TripleOverF27) {
  auto t = build_triple_psl2(27);
  EXPECT_EQ(t.n, 28u);
  EXPECT_TRUE(t.transitive);
  EXPECT_TRUE(t.product_is_identity());
  EXPECT_EQ(t.group_order, 9828);
  auto prof = t.profile();
  EXPECT_EQ(partition_string(prof.partitions[0]), "2^14");
  EXPECT_EQ(partition_string(prof.partitions[1]), "3^9,1");
  EXPECT_EQ(partition_string(prof.partitions[2]), "7^4");
  EXPECT_EQ(rh_genus(prof), 1);
}

TEST(Monodromy, TripleOverF8) {
  auto t = build_triple_psl2(8);
  EXPECT_EQ(t.n, 9u);
  EXPECT_EQ(t.group_order, 504);
  EXPECT_TRUE(t.transitive);
  EXPECT_EQ(rh_genus(t.profile()), 1);
  EXPECT_THROW(build_triple_psl2(5), std::invalid_argument);
}

TEST(ReferenceCover, IdentityHolds) {
  auto s = reference_solution();
  EXPECT_TRUE(s.identity_holds());
  EXPECT_EQ(s.f4.degree(), 4);
  EXPECT_EQ(s.f9.degree(), 9);
  EXPECT_EQ(s.f14.degree(), 14);
  auto ab = fit_alpha_beta(s.f4, s.f9, s.f14);
  EXPECT_EQ(ab.first, Rational(64));
  EXPECT_EQ(ab.second, Rational(-343));
}

TEST(ReferenceCover, PerturbedDataFailsIdentity) {
  auto s = reference_solution();
  s.f4 = s.f4 + E::constant(s.curve, 1);
  EXPECT_FALSE(s.identity_holds());
}

TEST(ReferenceCover, VerifierOnReferenceData) {
  auto rep = verify_cover(reference_solution(), {true, true});
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;
  ASSERT_NE(rep.find("f4_y_part_divisible_by_13"), nullptr);
  ASSERT_NE(rep.find("f14_y_part_divisible_by_43"), nullptr);
}

TEST(ModP, RelationChainAndReferenceSeed) {
  auto m = solve_modp_28();
  EXPECT_TRUE(m.ansatz.failed_relations().empty());
  const auto& s = m.cover;
  EXPECT_TRUE(s.identity_holds());
  auto c = s.curve;
  EXPECT_EQ(s.f4, modp29::f4(c));
  EXPECT_EQ(s.f9, modp29::f9(c));
  EXPECT_EQ(s.f14, modp29::f14(c));
  EXPECT_EQ(s.alpha, modp29::alpha());
  EXPECT_EQ(s.beta, modp29::beta());
  EXPECT_THROW(solve_modp_28(31), std::invalid_argument);
}

TEST(ModP, NormCheckIsMeaningfulOnlyOverQ) {
  auto m = solve_modp_28();
  EXPECT_TRUE(verify_cover(m.cover, {false, false}).all_passed());
  EXPECT_FALSE(verify_cover(m.cover, {true, false}).all_passed());
}

TEST(Newton, JacobianRankAtSeed) {
  auto seed = seed_unknowns(solve_modp_28().cover);
  auto rep = jacobian_rank_at_seed(seed);
  EXPECT_EQ(rep.columns, 14u);
  EXPECT_EQ(rep.rank_x_plus_leading_y, 14u);
  EXPECT_EQ(rep.rank_all_rows, 14u);
  // x-rows alone miss exactly one direction mod 29
  EXPECT_EQ(rep.rank_x_rows, 13u);
  EXPECT_EQ(rep.zero_columns_on_x_rows, (std::vector<std::string>{"beta"}));
}

TEST(Newton, XRowsAloneAreSingular) {
  auto seed = seed_unknowns(solve_modp_28().cover);
  NewtonOptions opt;
  opt.rows = NewtonRows::kXOnly;
  EXPECT_THROW(newton_lift(seed, 1, opt), SingularJacobian);
}

TEST(Newton, EveryStepVanishes) {
  auto seed = seed_unknowns(solve_modp_28().cover);
  auto lift = newton_lift(seed, 7);
  ASSERT_EQ(lift.steps.size(), 7u);
  for (const auto& s : lift.steps) {
    EXPECT_TRUE(s.x_rows_vanish) << s.step;
    EXPECT_TRUE(s.y_rows_vanish) << s.step;
    EXPECT_EQ(s.exponent, 1ul << s.step);
  }
  EXPECT_EQ(lift.unknowns[0].modulus(), pow_int(29, 128));
}

TEST(Newton, ThreadCountDoesNotChangeResult) {
  auto seed = seed_unknowns(solve_modp_28().cover);
  NewtonOptions one, four;
  four.jobs = 4;
  auto a = newton_lift(seed, 4, one), b = newton_lift(seed, 4, four);
  for (std::size_t i = 0; i < a.unknowns.size(); ++i) EXPECT_EQ(a.unknowns[i], b.unknowns[i]);
}

TEST(Reconstruct, SevenStepsGiveReferenceData) {
  auto res = reproduce_theorem1(7);
  ASSERT_TRUE(res.failure.empty()) << res.failure;
  EXPECT_TRUE(res.matches_reference);
  EXPECT_TRUE(res.ok());
  EXPECT_EQ(res.rational->minimal.curve, theorem1::curve());
}

TEST(Reconstruct, FourStepsFailCleanly) {
  auto seed = seed_unknowns(solve_modp_28().cover);
  auto lift = newton_lift(seed, 4);
  EXPECT_THROW(reconstruct_cover(lift.unknowns), ReconstructionFailed);
  auto res = reproduce_theorem1(4);
  EXPECT_FALSE(res.ok());
  EXPECT_FALSE(res.failure.empty());
}

TEST(Reconstruct, PrimitiveIntegral) {
  auto c = share(theorem1::curve());
  E f(c, QPoly{Rational(-1, 2), Rational(3, 4)}, QPoly{Rational(-5, 6)});
  E g = primitive_integral(f);
  EXPECT_EQ(g, E(c, QPoly{6, -9}, QPoly{10}));
  EXPECT_EQ(primitive_integral(g), g);
}

TEST(Cover239, EquationsAgreeWithCoordinateRing) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    Ansatz239<Rational> z;
    for (Rational* v : {&z.a1, &z.a3, &z.c1, &z.h0, &z.h1, &z.h2, &z.lambda, &z.mu}) *v = testing::random_rational(rng, 8);
    if (z.a3 == 0) continue;
    QCurve curve(z.a1, 0, z.a3, 0, 0);
    if (curve.discriminant() == 0) continue;
    auto c = share(curve);
    E g(c, QPoly{0, z.c1, -1}, QPoly{1});
    E h(c, QPoly{0, z.h1, z.h2}, QPoly{z.h0, 1});
    E defect = pow(g, 3) - z.lambda * E::y(c) - z.mu * (E::x(c) * pow(h, 2));
    std::map<std::pair<int, int>, Rational> expected;
    for (const auto& [mono, val] : ansatz239_equations(z)) expected[mono] = val;
    auto want = [&](int i, int j) {
      auto it = expected.find({i, j});
      return it == expected.end() ? Rational(0) : it->second;
    };
    for (int k = 0; k < 8; ++k) {
      auto ku = static_cast<std::size_t>(k);
      EXPECT_EQ(defect.u()[ku], want(k, 0)) << "x^" << k;
      EXPECT_EQ(defect.v()[ku], want(k, 1)) << "x^" << k << " y";
    }
  }
}

TEST(Cover239, UniqueSolution) {
  auto s = solve_cover_239();
  EXPECT_EQ(s.curve, QCurve(15, 0, 128, 0, 0));
  EXPECT_TRUE(s.defect().is_zero());
  EXPECT_EQ(s.lambda, Rational(16384));
  auto c = s.g.curve_ptr();
  EXPECT_EQ(s.g, E(c, QPoly{0, -17, -1}, QPoly{1}));
  EXPECT_EQ(s.h, E(c, QPoly{0, 71, 6}, QPoly{9, 1}));
  EXPECT_EQ(minimal_model(s.curve).curve, QCurve(1, -1, 1, -95, -697));
}

}  // namespace
}  // namespace shimbelyi
