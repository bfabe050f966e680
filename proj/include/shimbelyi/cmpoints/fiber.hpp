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

#include <stdexcept>
#include <utility>

#include "shimbelyi/coordring/coordring.hpp"
#include "shimbelyi/curve/minimal.hpp"

namespace shimbelyi {

/// Arithmetic in K = Q[x]/(phi), phi irreducible.
class ResidueField {
 public:
  explicit ResidueField(QPoly phi) : phi_(phi.monic()) {
    if (phi_.degree() < 1) throw std::invalid_argument("ResidueField: modulus must have positive degree");
  }

  const QPoly& modulus() const { return phi_; }
  long degree() const { return phi_.degree(); }

  QPoly reduce(const QPoly& a) const { return a % phi_; }
  QPoly mul(const QPoly& a, const QPoly& b) const { return (a * b) % phi_; }
  QPoly inverse(const QPoly& a) const {
    QPoly r = reduce(a);
    if (r.is_zero()) throw std::domain_error("ResidueField: inverse of zero");
    auto [g, s, t] = poly_xgcd(r, phi_);
    (void)t;
    if (g.degree() != 0) throw std::domain_error("ResidueField: modulus is reducible");
    return reduce(s);
  }
  /// Value of a polynomial with rational coefficients at an element of K.
  QPoly eval(const QPoly& f, const QPoly& at) const {
    QPoly acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = reduce(acc * at + QPoly(*it));
    return acc;
  }
  bool is_rational(const QPoly& a) const { return reduce(a).degree() <= 0; }

 private:
  QPoly phi_;
};

/// The fiber of a curve over the closed point phi(x) = 0 of the x-line:
/// K[y]/(y^2 + h(x) y - F(x)) with K = Q[x]/(phi). Elements are u + v y.
class FiberAlgebra {
 public:
  struct Elem {
    QPoly u, v;
  };

  FiberAlgebra(const QCurve& curve, QPoly phi)
      : field_(std::move(phi)), h_(field_.reduce(curve.y_linear())), f_(field_.reduce(curve.rhs())) {}

  const ResidueField& field() const { return field_; }

  Elem reduce(const CoordRingElem<Rational>& g) const { return {field_.reduce(g.u()), field_.reduce(g.v())}; }

  Elem mul(const Elem& a, const Elem& b) const {
    QPoly vv = field_.mul(a.v, b.v);
    return {field_.reduce(a.u * b.u + vv * f_), field_.reduce(a.u * b.v + a.v * b.u - vv * h_)};
  }

  /// Product over both points of the fiber: u^2 - u v h - v^2 F.
  QPoly norm(const Elem& a) const { return field_.reduce(a.u * a.u - a.u * a.v * h_ - a.v * a.v * f_); }

  /// The image under y -> -y - h.
  Elem conjugate(const Elem& a) const { return {field_.reduce(a.u - a.v * h_), -a.v}; }

  /// Throws std::domain_error when the element vanishes at a point of the fiber.
  Elem inverse(const Elem& a) const {
    QPoly n = norm(a);
    if (n.is_zero()) throw std::domain_error("FiberAlgebra: element vanishes on the fiber");
    QPoly ni = field_.inverse(n);
    Elem c = conjugate(a);
    return {field_.mul(c.u, ni), field_.mul(c.v, ni)};
  }

  /// Constant on both points of the fiber.
  bool is_base(const Elem& a) const { return a.v.is_zero(); }
  bool is_rational(const Elem& a) const { return is_base(a) && field_.is_rational(a.u); }

  /// Discriminant h^2 + 4F of the y-quadratic, as an element of K.
  QPoly y_discriminant() const { return field_.reduce(h_ * h_ + Rational(4) * f_); }

  /// Value at the point (x, y0) with y0 in K.
  QPoly at(const Elem& a, const QPoly& y0) const { return field_.reduce(a.u + field_.mul(a.v, y0)); }

 private:
  ResidueField field_;
  QPoly h_, f_;
};

}  // namespace shimbelyi
