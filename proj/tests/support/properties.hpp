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

#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// driver. Each returns how many of its cases held.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "shimbelyi/algebra/ratrecon.hpp"
#include "shimbelyi/coordring/coordring.hpp"
#include "shimbelyi/curve/minimal.hpp"

namespace shimbelyi::testing {

struct PropertyTally {
  std::string name;
  int cases = 0;
  int held = 0;
  bool all() const { return cases > 0 && held == cases; }
};

inline Integer random_integer(std::mt19937_64& rng, unsigned bits) {
  Integer z = 0;
  for (unsigned i = 0; i < bits; i += 32) z = (z << 32) + Integer(static_cast<unsigned long>(rng() & 0xffffffffu));
  z >>= (32 - bits % 32) % 32;
  return z;
}

inline Rational random_rational(std::mt19937_64& rng, unsigned bits = 20) {
  Integer n = random_integer(rng, bits) - random_integer(rng, bits);
  Integer d = random_integer(rng, bits) + 1;
  return make_rational(n, d);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline QPoly random_qpoly(std::mt19937_64& rng, long max_degree, unsigned bits = 6) {
  std::vector<Rational> c;
  long d = uniform(rng, 0, max_degree);
  for (long i = 0; i <= d; ++i) c.push_back(random_rational(rng, bits));
  return QPoly(std::move(c));
}

inline QCurve random_curve(std::mt19937_64& rng) {
  for (;;) {
    try {
      return QCurve::make(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -50, 50),
                          uniform(rng, -50, 50));
    } catch (const SingularCurve&) {
    }
  }
}

inline CoordRingElem<Rational> random_element(std::mt19937_64& rng, const CurvePtr<Rational>& c) {
  return CoordRingElem<Rational>(c, random_qpoly(rng, 4), random_qpoly(rng, 3));
}

/// (fg)' = f'g + fg' on random curves and elements.
inline PropertyTally leibniz_rule(int cases = 120, std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  PropertyTally t{"leibniz", 0, 0};
  for (int i = 0; i < cases; ++i) {
    auto c = share(random_curve(rng));
    auto f = random_element(rng, c), g = random_element(rng, c);
    ++t.cases;
    if (derive(f * g) == derive(f) * g + f * derive(g)) ++t.held;
  }
  return t;
}

/// deg(fg) = deg f + deg g for nonzero f, g.
inline PropertyTally degree_additivity(int cases = 120, std::uint64_t seed = 12) {
  std::mt19937_64 rng(seed);
  PropertyTally t{"degree_additivity", 0, 0};
  while (t.cases < cases) {
    auto c = share(random_curve(rng));
    auto f = random_element(rng, c), g = random_element(rng, c);
    if (f.is_zero() || g.is_zero()) continue;
    ++t.cases;
    if ((f * g).degree() == f.degree() + g.degree()) ++t.held;
  }
  return t;
}

/// rat_reconstruct(n/d mod 29^32) = n/d for |n|, d below 2^40.
inline PropertyTally reconstruction_round_trips(int cases = 1000, std::uint64_t seed = 13) {
  std::mt19937_64 rng(seed);
  const Integer m = pow_int(29, 32);
  PropertyTally t{"reconstruction_round_trip", 0, 0};
  while (t.cases < cases) {
    Rational q = random_rational(rng, 40);
    if (q.get_den() % 29 == 0) continue;
    ++t.cases;
    auto back = rat_reconstruct(encode_rational(q, m), m);
    if (back && *back == q) ++t.held;
  }
  return t;
}

/// An affine point of c over F_p found by scanning x from a random start.
inline CurvePoint<ResidueInt> random_point_modp(std::mt19937_64& rng, const WeierstrassCurve<ResidueInt>& c, long p,
                                                const ModulusPtr& mod) {
  long x0 = uniform(rng, 0, p - 1);
  for (long dx = 0; dx < p; ++dx) {
    ResidueInt x(Integer((x0 + dx) % p), mod);
    for (long yy = 0; yy < p; ++yy) {
      ResidueInt y(Integer(yy), mod);
      if (c.contains(x, y)) return CurvePoint<ResidueInt>(x, y);
    }
  }
  return CurvePoint<ResidueInt>::infinity();
}

/// (P + Q) + R = P + (Q + R) on random curves over F_p, plus integer
/// combinations of (0,0) on y^2 + y = x^3 - x over Q.
inline PropertyTally associativity(int cases = 150, std::uint64_t seed = 14) {
  std::mt19937_64 rng(seed);
  PropertyTally t{"associativity", 0, 0};
  const std::vector<long> primes{101, 103, 107, 109, 113};
  for (int i = 0; i < cases - 30; ++i) {
    long p = primes[static_cast<std::size_t>(i) % primes.size()];
    auto mod = make_modulus(Integer(p), 1);
    auto r = [&](long lo, long hi) { return ResidueInt(Integer(uniform(rng, lo, hi)), mod); };
    WeierstrassCurve<ResidueInt> c(r(0, 1), r(0, 1), r(0, 1), r(0, p - 1), r(0, p - 1));
    if (is_zero(c.discriminant())) {
      --i;
      continue;
    }
    auto a = random_point_modp(rng, c, p, mod), b = random_point_modp(rng, c, p, mod),
         d = random_point_modp(rng, c, p, mod);
    // include doubling and inverse cases
    if (i % 5 == 1) b = a;
    if (i % 7 == 2) d = negate(c, a);
    ++t.cases;
    if (group_law(c, group_law(c, a, b), d) == group_law(c, a, group_law(c, b, d))) ++t.held;
  }
  const QCurve e(0, 0, 1, -1, 0);
  const QPoint g(Rational(0), Rational(0));
  for (int i = 0; i < 30; ++i) {
    QPoint a = scalar_multiple(e, uniform(rng, -4, 4), g), b = scalar_multiple(e, uniform(rng, -4, 4), g),
           d = scalar_multiple(e, uniform(rng, -4, 4), g);
    ++t.cases;
    if (group_law(e, group_law(e, a, b), d) == group_law(e, a, group_law(e, b, d))) ++t.held;
  }
  return t;
}

/// Brute-force #E(F_p) by scanning all (x, y).
inline long brute_force_count(const QCurve& c, long p) {
  std::array<long, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) {
    Integer v = c.a_invariants()[i].get_num() % p;
    a[i] = (v.get_si() + p) % p;
  }
  long n = 1;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      if (((y * y + a[0] * x * y + a[2] * y - x * x * x - a[1] * x * x - a[3] * x - a[4]) % p + p) % p == 0) ++n;
  return n;
}

/// |p + 1 - #E(F_p)| <= 2 sqrt(p) at good primes, with the count checked
/// against a brute-force scan.
inline PropertyTally hasse_bounds(int cases = 150, std::uint64_t seed = 15) {
  std::mt19937_64 rng(seed);
  const auto primes = small_primes_up_to(200);
  PropertyTally t{"hasse", 0, 0};
  while (t.cases < cases) {
    QCurve c = random_curve(rng);
    long p = primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(primes.size()) - 1))];
    if (minimal_model(c).curve.discriminant().get_num() % p == 0) continue;
    long n = count_points_modp(c, p);
    long ap = p + 1 - n;
    ++t.cases;
    if (ap * ap <= 4 * p && n == brute_force_count(minimal_model(c).curve, p)) ++t.held;
  }
  return t;
}

}  // namespace shimbelyi::testing
