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

#include <map>
#include <vector>

#include "shimbelyi/curve/weierstrass.hpp"

namespace shimbelyi {

using QCurve = WeierstrassCurve<Rational>;
using QPoint = CurvePoint<Rational>;
using QModelMap = ModelMap<Rational>;

struct MinimalModel {
  QCurve curve;
  QModelMap map;  // carries the input curve onto `curve`
};

namespace detail {

inline bool is_integral(const QCurve& c) {
  for (const auto& a : c.a_invariants())
    if (a.get_den() != 1) return false;
  return true;
}

/// A map u = 1/k making every a_i integral.
inline QModelMap integral_scaling(const QCurve& c) {
  Integer k = 1;
  std::map<Integer, long> need;
  const std::array<long, 5> weight{1, 2, 3, 4, 6};
  for (std::size_t i = 0; i < 5; ++i) {
    const Integer& den = c.a_invariants()[i].get_den();
    if (den == 1) continue;
    for (const auto& [p, e] : factor_integer(den)) {
      long ki = (e + weight[i] - 1) / weight[i];
      need[p] = std::max(need[p], ki);
    }
  }
  for (const auto& [p, e] : need) k *= pow_int(p, static_cast<unsigned long>(e));
  return QModelMap{Rational(1) / Rational(k), 0, 0, 0};
}

inline long floor_val(const Integer& n, const Integer& p, long weight) {
  if (n == 0) return 1L << 40;
  return valuation(n, p) / weight;
}

inline Integer mod_int(const Integer& a, long m) { return mod_floor(a, Integer(m)); }

}  // namespace detail

/// Globally minimal model over Q (Laska, Kraus, Connell). The returned map
/// sends the input model to the reduced minimal model with a1, a3 in {0,1}
/// and a2 in {-1,0,1}.
inline MinimalModel minimal_model(const QCurve& input) {
  if (is_zero(input.discriminant())) throw SingularCurve("minimal_model: singular curve");
  QModelMap to_integral = detail::is_integral(input) ? QModelMap::identity() : detail::integral_scaling(input);
  QCurve c = transform(input, to_integral);

  const Integer c4 = c.c4().get_num(), c6 = c.c6().get_num(), disc = c.discriminant().get_num();
  Integer g = gcd(c4, c6);
  Integer u = 1;
  if (g != 1 && g != -1) {
    for (const auto& [p, unused] : factor_integer(g)) {
      long d = std::min({detail::floor_val(c4, p, 4), detail::floor_val(c6, p, 6), detail::floor_val(disc, p, 12)});
      while (d > 0) {
        bool ok = true;
        if (p == 3) {
          ok = c6 == 0 || valuation(c6, p) != 6 * d + 2;
        } else if (p == 2) {
          Integer a = c4 / pow_int(2, static_cast<unsigned long>(4 * d));
          Integer b = c6 / pow_int(2, static_cast<unsigned long>(6 * d));
          Integer b32 = detail::mod_int(b, 32);
          ok = detail::mod_int(b, 4) == 3 || (detail::mod_int(a, 16) == 0 && (b32 == 0 || b32 == 8));
        }
        if (ok) break;
        --d;
      }
      u *= pow_int(p, static_cast<unsigned long>(d));
    }
  }

  const Integer u4 = pow_int(u, 4), u6 = pow_int(u, 6);
  const Integer mc4 = c4 / u4, mc6 = c6 / u6;
  Integer b2 = 0;
  const Integer target = detail::mod_int(-mc6, 12);
  for (long cand : {-4L, -3L, 0L, 1L, 4L, 5L})
    if (detail::mod_int(Integer(cand), 12) == target) b2 = cand;
  const Integer a1 = detail::mod_int(b2, 2);
  const Integer a2 = (b2 - a1) / 4;
  const Integer b4 = (b2 * b2 - mc4) / 24;
  const Integer b6 = (-b2 * b2 * b2 + 36 * b2 * b4 - mc6) / 216;
  const Integer a3 = detail::mod_int(b6, 2);
  const Integer a4 = (b4 - a1 * a3) / 2;
  const Integer a6 = (b6 - a3) / 4;
  QCurve model{Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)};

  const Rational uq(u);
  Rational r = (uq * uq * model.b2() - c.b2()) / 12;
  Rational s = (uq * model.a1() - c.a1()) / 2;
  Rational t = (uq * uq * uq * model.a3() - c.a3() - r * c.a1()) / 2;
  QModelMap step{uq, r, s, t};
  if (!(transform(c, step) == model)) throw std::logic_error("minimal_model: reduction map mismatch");
  return MinimalModel{model, to_integral.then(step)};
}

/// #E(F_p), point at infinity included, for a prime p of good reduction of
/// the minimal model. Raises BadReduction when p divides the minimal discriminant.
inline long count_points_modp(const QCurve& input, long p) {
  if (p < 2 || !is_probable_prime(Integer(p))) throw std::invalid_argument("count_points_modp: p must be prime");
  QCurve c = detail::is_integral(input) ? input : minimal_model(input).curve;
  if (c.discriminant().get_num() % p == 0) {
    c = minimal_model(input).curve;
    if (c.discriminant().get_num() % p == 0)
      throw BadReduction(Integer(p), "count_points_modp: bad reduction at " + std::to_string(p));
  }
  std::array<long, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) a[i] = detail::mod_int(c.a_invariants()[i].get_num(), p).get_si();
  long count = 1;
  if (p == 2) {
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y)
        if ((y * y + a[0] * x * y + a[2] * y - x * x * x - a[1] * x * x - a[3] * x - a[4]) % 2 == 0) ++count;
    return count;
  }
  // y^2 + (a1 x + a3) y = f(x) has 1 + chi(D) solutions with
  // D = (a1 x + a3)^2 + 4 f(x).
  std::vector<int> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
  for (long x = 0; x < p; ++x) {
    long h = (a[0] * x + a[2]) % p;
    long f = (((x + a[1]) * x % p + a[3]) * x % p + a[4]) % p;
    long d = (h * h + 4 * f) % p;
    count += 1 + chi[static_cast<std::size_t>(d)];
  }
  return count;
}

}  // namespace shimbelyi
