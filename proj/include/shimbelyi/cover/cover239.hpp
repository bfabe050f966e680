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

#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "shimbelyi/algebra/factor_rational.hpp"
#include "shimbelyi/algebra/resultant.hpp"
#include "shimbelyi/coordring/coordring.hpp"
#include "shimbelyi/curve/minimal.hpp"

namespace shimbelyi {

/// Unknowns of the degree-9 ansatz on y^2 + a1 xy + a3 y = x^3:
///   g = y - x^2 + c1 x,  h = (x + h0) y + h2 x^2 + h1 x,
///   g^3 - lambda y = mu x h^2,
/// so that t = g^3 / (lambda y) has t - 1 = mu x h^2 / (lambda y).
template <class T>
struct Ansatz239 {
  T a1, a3, c1, h0, h1, h2, lambda, mu;
};

/// Coefficients of g^3 - lambda y - mu x h^2 in the canonical basis, keyed by
/// the monomial x^i y^j as (i, j). Monomials with identically vanishing
/// coefficient are omitted.
template <class T>
std::vector<std::pair<std::pair<int, int>, T>> ansatz239_equations(const Ansatz239<T>& z) {
  const T &a1 = z.a1, &a3 = z.a3, &c1 = z.c1, &h0 = z.h0, &h1 = z.h1, &h2 = z.h2, &lam = z.lambda, &mu = z.mu;
  const T one(1), two(2), three(3), six(6);
  return {
      {{6, 0}, -mu - one},
      {{5, 0}, three * c1 - two * h0 * mu - h2 * h2 * mu - three},
      {{4, 1}, a1 * mu - two * h2 * mu + three},
      {{4, 0}, -a1 - three * c1 * c1 + three * c1 - h0 * h0 * mu - two * h1 * h2 * mu},
      {{3, 1}, two * a1 * h0 * mu + three * a1 + a3 * mu - six * c1 - two * h0 * h2 * mu - two * h1 * mu + one},
      {{3, 0}, -a3 + c1 * c1 * c1 - h1 * h1 * mu},
      {{2, 1}, a1 * a1 - three * a1 * c1 + a1 * h0 * h0 * mu + two * a3 * h0 * mu + three * a3 + three * c1 * c1 -
                   two * h0 * h1 * mu},
      {{1, 1}, a3 * (two * a1 - three * c1 + h0 * h0 * mu)},
      {{0, 1}, a3 * a3 - lam},
  };
}

struct Cover239 {
  QCurve curve;
  CoordRingElem<Rational> g, h;
  Rational lambda, mu;
  Rational a1() const { return curve.a1(); }
  Rational a3() const { return curve.a3(); }
  /// g^3 - lambda y - mu x h^2, which vanishes for a genuine solution.
  CoordRingElem<Rational> defect() const {
    auto c = g.curve_ptr();
    return pow(g, 3) - lambda * CoordRingElem<Rational>::y(c) - mu * (CoordRingElem<Rational>::x(c) * pow(h, 2));
  }
};

namespace detail {

using BiPoly = Poly<QPoly>;  // polynomials in c1 with coefficients in Q[a1]

inline QPoly eval_inner(const BiPoly& f, const Rational& a1) {
  std::vector<Rational> v;
  for (const auto& c : f.coeffs()) v.push_back(c(a1));
  return QPoly(std::move(v));
}

inline std::vector<Rational> distinct_rational_roots(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("distinct_rational_roots of zero");
  auto roots = poly_factor_rational(f).rational_roots;
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

inline std::vector<Rational> common_rational_roots(const std::vector<QPoly>& polys) {
  QPoly g;
  for (const auto& p : polys) g = g.is_zero() ? p : (p.is_zero() ? g : poly_gcd(g, p));
  if (g.is_zero()) throw std::domain_error("common_rational_roots: all polynomials vanish");
  return g.degree() == 0 ? std::vector<Rational>{} : distinct_rational_roots(g);
}

}  // namespace detail

class NoCover239 : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves the degree-9 ansatz over Q by elimination. The equations with
/// constant leading terms fix mu, h2, h0, a3 and lambda; (4,0) is linear in
/// h1; (1,1)/a3 and (3,1) then give two polynomials in (a1, c1) whose
/// resultant in c1 has the admissible a1 among its rational roots.
inline std::vector<Cover239> solve_cover_239_all() {
  using detail::BiPoly;
  const BiPoly a1 = BiPoly(QPoly::x());
  const BiPoly c1 = BiPoly::x();
  const BiPoly one(1), two(2), three(3);
  const BiPoly h2 = (a1 - three) * BiPoly(QPoly(Rational(1, 2)));
  const BiPoly h0 = (three - three * c1 - h2 * h2) * BiPoly(QPoly(Rational(1, 2)));
  // (4,0) with mu = -1:  2 h2 h1 = a1 + 3c1^2 - 3c1 - h0^2
  const BiPoly num = a1 + three * c1 * c1 - three * c1 - h0 * h0;
  const BiPoly den = two * h2;
  // (1,1) divided by a3
  const BiPoly e1 = two * a1 - three * c1 - h0 * h0;
  // (3,1) with a3 = c1^3 + h1^2 and h1 = num/den, times den^2
  const BiPoly e2 = (three * a1 - two * a1 * h0 - c1 * c1 * c1 - BiPoly(6) * c1 + two * h0 * h2 + one) * den * den +
                    two * num * den - num * num;

  std::set<std::pair<Rational, Rational>> candidates;  // (a1, c1)
  QPoly res = resultant(e1, e2);
  if (res.is_zero()) throw NoCover239("solve_cover_239: resultant vanishes identically");
  std::vector<Rational> a1_values = detail::distinct_rational_roots(res);
  a1_values.push_back(3);  // h2 = 0, where the linear solve for h1 degenerates
  for (const Rational& a : a1_values) {
    std::vector<QPoly> conds{detail::eval_inner(e1, a)};
    if (a == 3)
      conds.push_back(detail::eval_inner(num, a));
    else
      conds.push_back(detail::eval_inner(e2, a));
    for (const Rational& c : detail::common_rational_roots(conds)) candidates.insert({a, c});
  }

  std::vector<Cover239> out;
  for (const auto& [a, c] : candidates) {
    const Rational hh2 = (a - 3) / 2;
    const Rational hh0 = (3 - 3 * c - hh2 * hh2) / 2;
    std::vector<Rational> h1_values;
    if (hh2 != 0) {
      h1_values.push_back((a + 3 * c * c - 3 * c - hh0 * hh0) / (2 * hh2));
    } else {
      // solve the remaining equations for h1 directly
      const QPoly h1 = QPoly::x();
      const QPoly a3 = QPoly(c * c * c) + h1 * h1;
      Ansatz239<QPoly> z{QPoly(a), a3, QPoly(c), QPoly(hh0), h1, QPoly(hh2), a3 * a3, QPoly(-1)};
      std::vector<QPoly> conds;
      for (const auto& [mono, e] : ansatz239_equations(z)) conds.push_back(e);
      h1_values = detail::common_rational_roots(conds);
    }
    for (const Rational& hh1 : h1_values) {
      const Rational a3 = c * c * c + hh1 * hh1;
      Ansatz239<Rational> z{a, a3, c, hh0, hh1, hh2, a3 * a3, -1};
      bool ok = a3 != 0;
      for (const auto& [mono, e] : ansatz239_equations(z)) ok = ok && e == 0;
      if (!ok) continue;
      QCurve curve(a, 0, a3, 0, 0);
      if (curve.discriminant() == 0) continue;
      auto cp = share(curve);
      CoordRingElem<Rational> g(cp, QPoly{0, c, -1}, QPoly{1});
      CoordRingElem<Rational> h(cp, QPoly{0, hh1, hh2}, QPoly{hh0, 1});
      Cover239 sol{curve, g, h, z.lambda, z.mu};
      if (!sol.defect().is_zero()) continue;
      out.push_back(std::move(sol));
    }
  }
  return out;
}

/// The unique nonsingular solution of the degree-9 ansatz.
inline Cover239 solve_cover_239() {
  auto all = solve_cover_239_all();
  if (all.size() != 1) throw NoCover239("solve_cover_239: expected one solution, found " + std::to_string(all.size()));
  return all.front();
}

}  // namespace shimbelyi
