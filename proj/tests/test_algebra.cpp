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
#include <set>

#include "shimbelyi/algebra/factor_modp.hpp"
#include "shimbelyi/algebra/factor_rational.hpp"
#include "shimbelyi/algebra/finite_field.hpp"
#include "shimbelyi/algebra/number_fields.hpp"
#include "shimbelyi/algebra/ratrecon.hpp"

namespace shimbelyi {
namespace {

Integer random_integer(std::mt19937_64& rng, unsigned bits) {
  Integer z = 0;
  for (unsigned i = 0; i < bits; i += 32) z = (z << 32) + Integer(static_cast<unsigned long>(rng() & 0xffffffffu));
  z >>= (32 - bits % 32) % 32;
  return z;
}

Rational random_rational(std::mt19937_64& rng, unsigned bits = 20) {
  Integer n = random_integer(rng, bits) - random_integer(rng, bits);
  Integer d = random_integer(rng, bits) + 1;
  return make_rational(n, d);
}

template <class R, class Gen>
void check_ring_axioms(Gen gen, int samples = 200) {
  for (int i = 0; i < samples; ++i) {
    R a = gen(), b = gen(), c = gen();
    EXPECT_TRUE((a * b) * c == a * (b * c));
    EXPECT_TRUE(a * (b + c) == a * b + a * c);
    EXPECT_TRUE((a + b) + c == a + (b + c));
    EXPECT_TRUE(a + R(0) == a);
    EXPECT_TRUE(a * R(1) == a);
    EXPECT_TRUE(is_zero(R(a - a)));
    EXPECT_TRUE(a * b == b * a);
  }
}

TEST(RingAxioms, Rationals) {
  std::mt19937_64 rng(1);
  check_ring_axioms<Rational>([&] { return random_rational(rng); });
}

TEST(RingAxioms, ResiduesModPrimePower) {
  std::mt19937_64 rng(2);
  auto mod = make_modulus(Integer(29), 16);
  check_ring_axioms<ResidueInt>([&] { return ResidueInt(random_integer(rng, 90), mod); });
}

TEST(RingAxioms, CubicField) {
  std::mt19937_64 rng(3);
  check_ring_axioms<CubicFieldElem>(
      [&] { return CubicFieldElem(random_rational(rng, 8), random_rational(rng, 8), random_rational(rng, 8)); });
}

TEST(RingAxioms, Cyclotomic) {
  std::mt19937_64 rng(4);
  check_ring_axioms<CycloElem>([&] { return CycloElem(random_rational(rng, 8), random_rational(rng, 8)); });
}

TEST(RingAxioms, RationalPolynomials) {
  std::mt19937_64 rng(5);
  check_ring_axioms<QPoly>([&] {
    std::vector<Rational> v;
    for (int i = 0; i < 4; ++i) v.push_back(random_rational(rng, 6));
    return QPoly(v);
  });
}

TEST(RingAxioms, FiniteFields) {
  for (const FiniteField& k : {FiniteField::f27(), FiniteField::f8()}) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
      auto a = k.from_index(static_cast<std::uint32_t>(rng() % k.order()));
      auto b = k.from_index(static_cast<std::uint32_t>(rng() % k.order()));
      auto c = k.from_index(static_cast<std::uint32_t>(rng() % k.order()));
      EXPECT_EQ(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
      EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
      EXPECT_EQ(k.mul(a, k.one()), a);
      if (!k.is_zero(a)) EXPECT_EQ(k.mul(a, k.inv(a)), k.one());
    }
  }
}

TEST(FiniteField, RejectsReducibleModulus) {
  // w^2 + 1 = (w + 1)^2 over F_2
  EXPECT_THROW(FiniteField(2, {1, 0, 1}), std::invalid_argument);
}

TEST(Residue, ModulusAdoptionAndBadReduction) {
  auto mod = make_modulus(Integer(29), 2);
  ResidueInt a(Integer(58), mod);
  ResidueInt three(3);
  EXPECT_EQ((a + three).value(), 61);
  try {
    (void)a.inverse();
    FAIL() << "expected BadReduction";
  } catch (const BadReduction& e) {
    EXPECT_EQ(e.factor(), 29);
  }
  auto other = make_modulus(Integer(29), 3);
  EXPECT_THROW((void)(a + ResidueInt(Integer(1), other)), std::invalid_argument);
}

TEST(RatReconstruct, IntegerFixedPoint) {
  Integer m = pow_int(29, 4);
  auto r = rat_reconstruct(Integer(5), m);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, Rational(5));
}

TEST(RatReconstruct, CmAbscissa) {
  Integer m = pow_int(29, 16);
  Rational target = make_rational(-10099, 64);
  auto r = rat_reconstruct(encode_rational(target, m), m);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, target);
}

TEST(RatReconstruct, RandomRoundTrips) {
  std::mt19937_64 rng(7);
  Integer m = pow_int(29, 32);
  for (int i = 0; i < 1000; ++i) {
    Integer n = random_integer(rng, 40) - random_integer(rng, 40);
    Integer d = random_integer(rng, 40) + 1;
    if (d % 29 == 0) continue;
    Rational q = make_rational(n, d);
    auto r = rat_reconstruct(encode_rational(q, m), m);
    ASSERT_TRUE(r.has_value()) << to_string(q);
    EXPECT_EQ(*r, q);
  }
}

TEST(RatReconstruct, QuantifiedBound) {
  // Round trip holds for every |n|, d <= sqrt(m/2)/2.
  std::mt19937_64 rng(8);
  for (unsigned k : {3u, 8u, 20u}) {
    Integer m = pow_int(29, k);
    Integer half_bound = isqrt(Integer(m / 2)) / 2;
    std::uniform_int_distribution<unsigned> bits(1, static_cast<unsigned>(mpz_sizeinbase(half_bound.get_mpz_t(), 2)));
    for (int i = 0; i < 200; ++i) {
      Integer n = mod_floor(random_integer(rng, bits(rng)), half_bound + 1);
      Integer d = mod_floor(random_integer(rng, bits(rng)), half_bound) + 1;
      if (rng() % 2) n = -n;
      if (d % 29 == 0 || gcd(n, d) != 1) continue;
      auto r = rat_reconstruct(encode_rational(make_rational(n, d), m), m);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r, make_rational(n, d));
    }
  }
}

TEST(RatReconstruct, NoResultWhenTooLarge) {
  Integer m = pow_int(29, 4);  // bound is 594
  Rational big = make_rational(100003, 99991);
  EXPECT_FALSE(rat_reconstruct(encode_rational(big, m), m).has_value());
  EXPECT_THROW((void)rat_reconstruct(Integer(1), Integer(3)), std::invalid_argument);
}

FpPoly fp(std::initializer_list<long> coeffs, const ModulusPtr& p) {
  std::vector<ResidueInt> v;
  for (long c : coeffs) v.emplace_back(Integer(c), p);
  return FpPoly(v);
}

TEST(FactorModP, DifferenceOfSquares) {
  auto p = make_modulus(Integer(29));
  auto fac = poly_factor_modp(fp({-1, 0, 1}, p));
  ASSERT_EQ(fac.size(), 2u);
  EXPECT_EQ(fac[0].factor, fp({1, 1}, p));   // x + 1
  EXPECT_EQ(fac[1].factor, fp({28, 1}, p));  // x - 1
}

TEST(FactorModP, CyclicCubicAtThirteenMatchesRootSearch) {
  auto p = make_modulus(Integer(13));
  FpPoly f = fp({-1, -2, 1, 1}, p);
  std::vector<long> roots;  // brute-force oracle
  for (long x = 0; x < 13; ++x)
    if ((x * x * x + x * x - 2 * x - 1) % 13 == 0) roots.push_back(x);
  auto fac = poly_factor_modp(f);
  ASSERT_EQ(roots.size(), 3u);  // 13 = -1 mod 7 splits completely
  ASSERT_EQ(fac.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(fac[i].factor.degree(), 1);
    Integer r = mod_floor(-fac[i].factor[0].value(), 13);
    EXPECT_NE(std::find(roots.begin(), roots.end(), r.get_si()), roots.end());
  }
}

TEST(FactorModP, RecoversRandomProducts) {
  auto p = make_modulus(Integer(29));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    // construct five irreducibles by rejection sampling, checked by root/degree oracle
    std::vector<FpPoly> chosen;
    while (chosen.size() < 5) {
      long d = 1 + static_cast<long>(rng() % 3);
      std::vector<ResidueInt> v;
      for (long i = 0; i < d; ++i) v.emplace_back(Integer(static_cast<unsigned long>(rng() % 29)), p);
      v.emplace_back(Integer(1), p);
      FpPoly g(v);
      bool has_root = false;
      for (long x = 0; x < 29; ++x)
        if (g(ResidueInt(Integer(x), p)).is_zero()) has_root = true;
      if (d <= 3 && !has_root) chosen.push_back(g);  // degree <= 3 without roots is irreducible
    }
    FpPoly prod(ResidueInt(Integer(7), p));
    for (const auto& g : chosen) prod = prod * g;
    auto fac = poly_factor_modp(prod);
    std::multiset<std::string> want, got;
    for (const auto& g : chosen) want.insert(to_string(g));
    for (const auto& fm : fac)
      for (long k = 0; k < fm.multiplicity; ++k) got.insert(to_string(fm.factor));
    EXPECT_EQ(want, got);
  }
}

TEST(FactorModP, ProductOfFactorsAndIrreducibility) {
  auto p = make_modulus(Integer(29));
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ResidueInt> v;
    long d = 2 + static_cast<long>(rng() % 12);
    for (long i = 0; i <= d; ++i) v.emplace_back(Integer(static_cast<unsigned long>(rng() % 29)), p);
    v.back() = ResidueInt(Integer(1), p);
    FpPoly f(v);
    FpPoly prod(ResidueInt(Integer(1), p));
    for (const auto& fm : poly_factor_modp(f)) {
      for (long k = 0; k < fm.multiplicity; ++k) prod = prod * fm.factor;
      // gcd(g, x^(p^i) - x) = 1 for i < deg g
      FpPoly h = FpPoly::x();
      for (long i = 1; i < fm.factor.degree(); ++i) {
        h = pow_mod(h, Integer(29), fm.factor);
        EXPECT_EQ(poly_gcd(h - FpPoly::x(), fm.factor).degree(), 0);
      }
    }
    EXPECT_EQ(prod, f);
  }
}

QPoly qp(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(v);
}

TEST(FactorRational, RootAndQuadratic) {
  auto r = poly_factor_rational(qp({-3, 1}) * qp({1, 0, 1}));
  EXPECT_EQ(r.rational_roots, std::vector<Rational>{Rational(3)});
  EXPECT_EQ(r.factor_degrees, (std::vector<long>{1, 2}));
}

TEST(FactorRational, TwoCubicsIrreducibleModFive) {
  // x^3 + x + 1 and x^3 + 2x + 1 have no roots mod 5 (checked below), so they
  // are irreducible over Q.
  QPoly a = qp({1, 1, 0, 1}), b = qp({1, 2, 0, 1});
  for (long x = 0; x < 5; ++x) {
    EXPECT_NE((x * x * x + x + 1) % 5, 0);
    EXPECT_NE((x * x * x + 2 * x + 1) % 5, 0);
  }
  auto r = poly_factor_rational(a * b);
  EXPECT_TRUE(r.rational_roots.empty());
  EXPECT_EQ(r.factor_degrees, (std::vector<long>{3, 3}));
}

TEST(FactorRational, SwinnertonDyerLikeNeedsRecombination) {
  // x^4 - 10x^2 + 1 is irreducible over Q but splits into quadratics or
  // linears modulo every prime.
  auto r = poly_factor_rational(qp({1, 0, -10, 0, 1}));
  EXPECT_EQ(r.factor_degrees, std::vector<long>{4});
}

TEST(FactorRational, RandomProductsAndMultiplicities) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    QPoly f(Rational(1));
    long total = 0;
    std::vector<Rational> roots;
    for (int k = 0; k < 3; ++k) {
      Rational r = random_rational(rng, 10);
      f = f * QPoly{Rational(-r), Rational(1)};
      roots.push_back(r);
      ++total;
    }
    f = f * qp({5, 0, 0, 1}) * qp({3, 0, 1});
    total += 5;
    auto res = poly_factor_rational(f);
    long sum = 0;
    for (long d : res.factor_degrees) sum += d;
    EXPECT_EQ(sum, f.degree());
    EXPECT_EQ(sum, total);
    for (const auto& r : res.rational_roots) EXPECT_TRUE(is_zero(f(r)));
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(res.rational_roots, roots);
  }
}

TEST(CubicField, Norms) {
  EXPECT_EQ(cubic_norm(CubicFieldElem(7)), Rational(343));
  EXPECT_EQ(cubic_norm(CubicFieldElem(-6, 1, 0)), Rational(-239));
  EXPECT_EQ(cubic_norm(CubicFieldElem(-7, 2, 1)), Rational(-167));
}

TEST(CubicField, NormIsMultiplicative) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    CubicFieldElem a(random_rational(rng, 8), random_rational(rng, 8), random_rational(rng, 8));
    CubicFieldElem b(random_rational(rng, 8), random_rational(rng, 8), random_rational(rng, 8));
    EXPECT_EQ(cubic_norm(a * b), cubic_norm(a) * cubic_norm(b));
  }
}

TEST(CubicField, GeneratorSatisfiesMinimalPolynomialAndConjugation) {
  CubicFieldElem c = CubicFieldElem::generator();
  EXPECT_TRUE(CubicFieldElem::minimal_polynomial().eval(c).is_zero());
  EXPECT_TRUE(CubicFieldElem::minimal_polynomial().eval(c.conjugate()).is_zero());
  EXPECT_EQ(c.conjugate().conjugate().conjugate(), c);
  EXPECT_NEAR(c.embed(1), 2 * std::cos(2 * std::numbers::pi / 7), 1e-12);
  CubicFieldElem a(3, -1, 2);
  EXPECT_EQ(a * inverse(a), CubicFieldElem(1));
}

TEST(Cyclotomic, ConjugationAndNorm) {
  CycloElem z = CycloElem::zeta();
  EXPECT_EQ(z * z * z, CycloElem(1));
  EXPECT_EQ(z * z + z + CycloElem(1), CycloElem(0));
  CycloElem a(Rational(2), Rational(5));
  EXPECT_TRUE((a * a.conjugate()).is_rational());
  EXPECT_EQ((a * a.conjugate()).re_part(), a.norm());
}

TEST(IntegerHelpers, SquarefreePart) {
  EXPECT_EQ(squarefree_part(make_rational(-44, 9)), -11);
  EXPECT_EQ(squarefree_part(Rational(72)), 2);
  EXPECT_EQ(valuation(Integer(29 * 29 * 3), Integer(29)), 2);
  auto f = factor_integer(Integer("8480886141"));
  EXPECT_EQ(f.at(Integer(7)), 2);
  EXPECT_EQ(f.at(Integer(17681)), 1);
}

}  // namespace
}  // namespace shimbelyi
