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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "shimbelyi/algebra/number_fields.hpp"
#include "shimbelyi/cmpoints/fiber.hpp"
#include "shimbelyi/cmpoints/fixed_locus.hpp"
#include "shimbelyi/cover/cover239.hpp"

namespace shimbelyi {

class NotOnFixedLocus : public std::invalid_argument {
 public:
  explicit NotOnFixedLocus(const std::string& x) : std::invalid_argument("x = " + x + " is not on the fixed locus") {}
};

class CMOrbitMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point of the fixed locus. x is the point at infinity (monostate), a
/// rational, an element of Q(c), or the irreducible factor it is a root of.
struct CMRecord {
  using XCoord = std::variant<std::monostate, Rational, CubicFieldElem, QPoly>;
  XCoord x;
  /// Set when t is rational.
  std::optional<Rational> t;
  /// Square class of the field generated by the points over this x: an
  /// integer over Q, or an element of Q(c) for the cubic orbits.
  std::string square_class;
  /// Degree of the field of definition of x.
  long degree = 1;
  std::optional<Rational> norm;
};

inline std::string to_string(const CMRecord::XCoord& x) {
  if (std::holds_alternative<std::monostate>(x)) return "infinity";
  if (const auto* q = std::get_if<Rational>(&x)) return to_string(*q);
  if (const auto* e = std::get_if<CubicFieldElem>(&x)) return to_string(*e);
  return "root of " + to_string(std::get<QPoly>(x));
}

struct CMValue {
  Rational x;
  Rational t;
  Rational y_discriminant;
  Integer square_class;
};

namespace detail {

/// t = a / b on the fiber over phi; nullopt when t is not constant there or b
/// vanishes at a point of the fiber.
inline std::optional<QPoly> t_on_fiber(const FiberAlgebra& fa, const CoordRingElem<Rational>& a,
                                       const CoordRingElem<Rational>& b) {
  FiberAlgebra::Elem t;
  try {
    t = fa.mul(fa.reduce(a), fa.inverse(fa.reduce(b)));
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  if (!fa.is_base(t)) return std::nullopt;
  return t.u;
}

inline bool is_rational_square(const Rational& q) {
  return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

}  // namespace detail

/// t and the CM square class at a rational x-coordinate of the fixed locus of
/// the negation.
inline CMValue cm_t_value(const CoverSolution<Rational>& sol, const FixedLocus& locus, const Rational& x0) {
  if (locus.involution.kind != InvolutionSpec::Kind::kNegation) throw std::invalid_argument("cm_t_value expects a negation locus");
  if (locus.numerator(x0) != 0) throw NotOnFixedLocus(to_string(x0));
  FiberAlgebra fa(*sol.curve, QPoly{Rational(-x0), Rational(1)});
  auto t = detail::t_on_fiber(fa, pow(sol.f14, 2), sol.alpha * pow(sol.f4, 7));
  if (!t) throw std::domain_error("cm_t_value: t is not defined at x = " + to_string(x0));
  Rational disc = fa.y_discriminant()[0];
  return {x0, (*t)[0], disc, squarefree_part(disc)};
}

inline CMValue cm_t_value(const CoverSolution<Rational>& sol, const Rational& x0) {
  return cm_t_value(sol, fixed_locus(sol, InvolutionSpec::negation()), x0);
}

/// The rational points of the negation fixed locus, with x = infinity first.
inline std::vector<CMRecord> cm_rational_points(const CoverSolution<Rational>& sol, const FixedLocus& locus) {
  std::vector<CMRecord> out;
  out.push_back({std::monostate{}, Rational(1), "", 1, std::nullopt});
  auto roots = locus.factorization.rational_roots;
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const auto& x0 : roots) {
    CMValue v = cm_t_value(sol, locus, x0);
    out.push_back({x0, v.t, to_string(v.square_class), 1, std::nullopt});
  }
  return out;
}

/// True iff w is a square in Q(c). Q(c) is Galois of prime degree, so for
/// irrational w the degree-6 polynomial charpoly_w(z^2) is irreducible
/// unless sqrt(w) lies in Q(c).
inline bool is_square_in_cubic_field(const CubicFieldElem& w) {
  if (w.is_rational()) return detail::is_rational_square(w[0]);
  QPoly cp = w.characteristic_polynomial();
  QPoly lifted = cp.compose(QPoly{Rational(0), Rational(0), Rational(1)});
  for (long d : poly_factor_rational(lifted).factor_degrees)
    if (d < 6) return true;
  return false;
}

/// Known x-coordinates of the four Galois orbits of cubic CM points.
inline std::array<CubicFieldElem, 4> cubic_orbit_x_coordinates() {
  return {CubicFieldElem(-19, 189, 0), CubicFieldElem(-397, -567, -189), CubicFieldElem(-1342, -3402, -1512),
          CubicFieldElem(-5878, -16254, -7182)};
}

/// Known square-class generators of the cubic CM fields.
inline std::array<CubicFieldElem, 4> cubic_orbit_generators() {
  return {CubicFieldElem(-7, 2, 1), CubicFieldElem(-6, 1, 0), CubicFieldElem(-3, -2, -3), CubicFieldElem(-11, -2, 1)};
}

struct CubicOrbitMatch {
  CubicFieldElem x;
  QPoly factor;                   // degree-3 factor of the fixed locus with factor(x) = 0
  CubicFieldElem y_discriminant;  // h(x)^2 + 4 F(x)
  std::optional<std::size_t> generator;
  int conjugate_power = 0;        // y_discriminant = sigma^k(generator) * square
  bool totally_negative = false;
  bool t_on_base = false;         // t constant on the fiber, hence in Q(x)
};

/// Matches each known x-coordinate to a cubic factor of the fixed locus and
/// its y-discriminant to a known generator modulo squares in Q(c).
inline std::vector<CubicOrbitMatch> match_cubic_orbits(const CoverSolution<Rational>& sol, const FixedLocus& locus) {
  const auto gens = cubic_orbit_generators();
  std::vector<CubicOrbitMatch> out;
  for (const auto& x0 : cubic_orbit_x_coordinates()) {
    CubicOrbitMatch m{x0, {}, {}, std::nullopt, 0, false, false};
    for (const auto& [f, mult] : locus.factorization.factors) {
      if (f.degree() == 3 && to_rational(f).eval<CubicFieldElem>(x0).is_zero()) m.factor = to_rational(f);
    }
    if (m.factor.is_zero()) throw CMOrbitMismatch("no cubic fixed-locus factor vanishes at " + to_string(x0));
    const QCurve& c = *sol.curve;
    CubicFieldElem h = c.y_linear().eval<CubicFieldElem>(x0);
    m.y_discriminant = h * h + CubicFieldElem(4) * c.rhs().eval<CubicFieldElem>(x0);
    for (std::size_t g = 0; g < gens.size() && !m.generator; ++g) {
      CubicFieldElem conj = gens[g];
      for (int k = 0; k < 3; ++k, conj = conj.conjugate()) {
        if (is_square_in_cubic_field(m.y_discriminant * inverse(conj))) {
          m.generator = g;
          m.conjugate_power = k;
          break;
        }
      }
    }
    if (!m.generator) throw CMOrbitMismatch("y-discriminant at " + to_string(x0) + " matches no known generator");
    m.totally_negative = is_totally_negative(gens[*m.generator]);
    FiberAlgebra fa(c, m.factor);
    m.t_on_base = detail::t_on_fiber(fa, pow(sol.f14, 2), sol.alpha * pow(sol.f4, 7)).has_value();
    out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<CMRecord> cm_cubic_orbits(const CoverSolution<Rational>& sol, const FixedLocus& locus) {
  std::vector<CMRecord> out;
  const auto gens = cubic_orbit_generators();
  for (const auto& m : match_cubic_orbits(sol, locus)) {
    CubicFieldElem g = gens[*m.generator];
    for (int k = 0; k < m.conjugate_power; ++k) g = g.conjugate();
    out.push_back({m.x, std::nullopt, to_string(g), 3, cubic_norm(g)});
  }
  return out;
}

/// Laurent-free local expansion of a / b at an affine point where the curve
/// is smooth in the y-direction, with x - x(P) as the parameter. nullopt when
/// t has a pole there.
inline std::optional<Rational> value_by_expansion(const CoordRingElem<Rational>& a, const CoordRingElem<Rational>& b,
                                                   const QPoint& p, std::size_t order = 24) {
  const QCurve& c = a.curve();
  const Rational gy = 2 * p.y() + c.a1() * p.x() + c.a3();
  if (gy == 0) throw std::domain_error("value_by_expansion: y is not a local function of x at this point");
  auto truncate = [order](const QPoly& s) {
    std::vector<Rational> v(s.coeffs().begin(), s.coeffs().begin() + static_cast<long>(std::min(order, s.size())));
    return QPoly(std::move(v));
  };
  const QPoly xs{p.x(), Rational(1)};
  const QPoly fx = c.rhs().compose(xs), hx = c.y_linear().compose(xs);
  QPoly w;
  for (std::size_t i = 0; i <= order; ++i) {
    QPoly ys = QPoly(p.y()) + w;
    QPoly g = truncate(ys * ys + hx * ys - fx);
    w = truncate(w - Rational(1 / gy) * g);
  }
  const QPoly ys = QPoly(p.y()) + w;
  auto series = [&](const CoordRingElem<Rational>& f) { return truncate(f.u().compose(xs) + f.v().compose(xs) * ys); };
  QPoly sa = series(a), sb = series(b);
  auto val = [](const QPoly& s) {
    std::size_t i = 0;
    while (i < s.size() && s[i] == 0) ++i;
    return i;
  };
  std::size_t va = val(sa), vb = val(sb);
  if (vb >= order) throw std::domain_error("value_by_expansion: denominator vanishes to high order");
  if (va < vb) return std::nullopt;
  if (va > vb) return Rational(0);
  return Rational(sa[va] / sb[vb]);
}

struct CM239Report {
  QPoint w2_of_infinity;
  std::optional<Rational> t_at_w2_infinity;
  FixedLocus locus;
  std::vector<CMRecord> records;
};

/// CM points of the degree-9 cover t = g^3 / (lambda y), with w2 the
/// reflection in the simple zero Q0 = (0, -a3) of y.
inline CM239Report cm_points_239(const Cover239& sol9) {
  using E = CoordRingElem<Rational>;
  const QCurve& c = sol9.curve;
  auto cp = sol9.g.curve_ptr();
  InvolutionSpec w2 = InvolutionSpec::reflection(QPoint(Rational(0), Rational(-c.a3())));
  E a = pow(sol9.g, 3), b = sol9.lambda * E::y(cp);

  CM239Report out{w2.apply(c, QPoint::infinity()), std::nullopt, fixed_locus_of(a, b, w2), {}};
  out.t_at_w2_infinity = value_by_expansion(a, b, out.w2_of_infinity);
  out.records.push_back({Rational(out.w2_of_infinity.x()), out.t_at_w2_infinity, "", 1, std::nullopt});

  for (const auto& [zf, mult] : out.locus.factorization.factors) {
    QPoly phi = to_rational(zf);
    FiberAlgebra fa(c, phi);
    const ResidueField& k = fa.field();
    FiberAlgebra::Elem d = fa.reduce(out.locus.difference);
    std::optional<QPoly> t;
    if (d.u.is_zero() && d.v.is_zero()) {
      t = detail::t_on_fiber(fa, a, b);
    } else if (!d.v.is_zero()) {
      QPoly y0 = k.mul(-d.u, k.inverse(d.v));
      QPoly bv = fa.at(fa.reduce(b), y0);
      if (!bv.is_zero()) t = k.mul(fa.at(fa.reduce(a), y0), k.inverse(bv));
    }
    if (!t || !k.is_rational(*t)) continue;
    CMRecord r;
    r.degree = phi.degree();
    if (phi.degree() == 1) {
      Rational x0 = -phi[0] / phi[1];
      r.x = x0;
      // the two points over x0 are conjugate over the square class of the y-discriminant
      r.square_class = to_string(squarefree_part(fa.y_discriminant()[0]));
    } else {
      r.x = phi;
      if (phi.degree() == 2) r.square_class = to_string(squarefree_part(phi[1] * phi[1] - 4 * phi[0] * phi[2]));
    }
    r.t = (*t)[0];
    out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace shimbelyi
