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

// Involutions of an elliptic curve and the locus t(P) = t(w(P)) of a
// rational function t = A/B on it.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "shimbelyi/algebra/factor_rational.hpp"
#include "shimbelyi/coordring/coordring.hpp"
#include "shimbelyi/cover/solution.hpp"
#include "shimbelyi/curve/minimal.hpp"

namespace shimbelyi {

class CommonPole : public std::domain_error {
 public:
  explicit CommonPole(const QPoly& common)
      : std::domain_error("t and its pullback share poles over " + to_string(common)) {}
};

/// P -> -P, or P -> 2 Q0 - P for a point Q0 of the curve.
struct InvolutionSpec {
  enum class Kind { kNegation, kPointReflection };
  Kind kind = Kind::kNegation;
  std::optional<QPoint> center;

  static InvolutionSpec negation() { return {}; }
  static InvolutionSpec reflection(QPoint q0) { return {Kind::kPointReflection, std::move(q0)}; }

  /// The translation part T = 2 Q0 (infinity for a negation).
  QPoint translation(const QCurve& c) const {
    if (kind == Kind::kNegation) return QPoint::infinity();
    if (!center || !on_curve(c, *center)) throw std::invalid_argument("InvolutionSpec: center is not on the curve");
    return group_law(c, *center, *center);
  }

  QPoint apply(const QCurve& c, const QPoint& p) const { return group_law(c, translation(c), negate(c, p)); }
};

/// f o w written as num / den with den a polynomial in x.
struct PulledBack {
  CoordRingElem<Rational> num;
  QPoly den;
};

inline PulledBack pullback(const CoordRingElem<Rational>& f, const InvolutionSpec& spec) {
  const QCurve& c = f.curve();
  const QPoint t = spec.translation(c);
  if (t.is_infinity()) return {neg_pullback(f), QPoly(1)};

  using E = CoordRingElem<Rational>;
  auto cp = f.curve_ptr();
  E x = E::x(cp), one = E::constant(cp, Rational(1));
  E d = x - t.x() * one;
  // -P = (x, y'), then the chord through T and -P.
  E yp = -E::y(cp) - c.a1() * x - c.a3() * one;
  E rise = yp - t.y() * one;
  E xn = rise * rise + c.a1() * (rise * d) - (pow(d, 2) * (c.a2() * one + x + t.x() * one));
  E yn = -((rise + c.a1() * d) * xn) - pow(d, 2) * (t.y() * d - t.x() * rise) - c.a3() * pow(d, 3);

  const long level = std::max(0l, f.degree());
  E num = E(cp);
  E xn_pow = one;
  for (long i = 0; i <= std::max(f.u().degree(), f.v().degree()); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (!is_zero(f.u()[ui])) num += f.u()[ui] * (xn_pow * pow(d, static_cast<unsigned>(level - 2 * i)));
    if (!is_zero(f.v()[ui])) num += f.v()[ui] * (xn_pow * yn * pow(d, static_cast<unsigned>(level - 2 * i - 3)));
    xn_pow *= xn;
  }
  return {num, pow(QPoly{-t.x(), Rational(1)}, static_cast<unsigned>(level))};
}

struct FixedLocus {
  InvolutionSpec involution;
  /// Numerator of t - t o w over the common denominator.
  CoordRingElem<Rational> difference;
  /// For a negation: difference == numerator(x) * antisymmetric_factor.
  std::optional<CoordRingElem<Rational>> antisymmetric_factor;
  bool antisymmetric = false;
  /// Polynomial in x whose roots are the x-coordinates of the locus: the
  /// cofactor of 2y + a1 x + a3 for a negation, the norm of the difference otherwise.
  QPoly numerator;
  RationalFactorization factorization;
  /// Checked only for negations, where the pole divisors of t and t o w are
  /// the zeros of B and of B o w.
  bool poles_checked = false;
};

/// Locus of t(P) = t(w(P)) for t = a / b. Throws CommonPole when the pole
/// divisors of t and t o w meet.
inline FixedLocus fixed_locus_of(const CoordRingElem<Rational>& a, const CoordRingElem<Rational>& b,
                                 const InvolutionSpec& spec) {
  using E = CoordRingElem<Rational>;
  auto cp = a.curve_ptr();
  PulledBack pa = pullback(a, spec), pb = pullback(b, spec);
  E diff = a * pb.num * E(cp, pa.den) - b * pa.num * E(cp, pb.den);
  FixedLocus out{spec, diff, std::nullopt, false, {}, {}, false};

  if (spec.kind == InvolutionSpec::Kind::kNegation) {
    QPoly common = common_zeros(b, pb.num);
    if (common.degree() > 0) throw CommonPole(common);
    out.poles_checked = true;
    E factor = Rational(2) * E::y(cp) + E(cp, a.curve().y_linear());
    out.antisymmetric = neg_pullback(diff) == -diff;
    QPoly v = diff.v();
    out.numerator = Rational(1, 2) * v;
    if (!out.antisymmetric || !(E(cp, out.numerator) * factor == diff))
      throw std::logic_error("fixed_locus: difference is not antisymmetric");
    out.antisymmetric_factor = factor;
  } else {
    out.numerator = norm(diff);
  }
  if (out.numerator.is_zero()) throw std::domain_error("fixed_locus: t is invariant under the involution");
  out.factorization = poly_factor_rational(out.numerator);
  return out;
}

/// t = F14^2 / (alpha F4^7) for a cover solution over Q.
inline FixedLocus fixed_locus(const CoverSolution<Rational>& sol, const InvolutionSpec& spec) {
  return fixed_locus_of(pow(sol.f14, 2), sol.alpha * pow(sol.f4, 7), spec);
}

}  // namespace shimbelyi
