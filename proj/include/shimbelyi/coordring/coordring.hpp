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

#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "shimbelyi/curve/weierstrass.hpp"

namespace shimbelyi {

template <class R>
using CurvePtr = std::shared_ptr<const WeierstrassCurve<R>>;

template <class R>
CurvePtr<R> share(const WeierstrassCurve<R>& c) {
  return std::make_shared<const WeierstrassCurve<R>>(c);
}

class ParentMismatch : public std::invalid_argument {
 public:
  ParentMismatch() : std::invalid_argument("coordinate ring elements live on different curves") {}
};

/// u(x) + v(x) y in the coordinate ring of a Weierstrass curve, kept in the
/// canonical form where y^2 has been eliminated.
template <class R>
class CoordRingElem {
 public:
  static constexpr long kDegreeOfZero = std::numeric_limits<long>::min();

  explicit CoordRingElem(CurvePtr<R> curve, Poly<R> u = {}, Poly<R> v = {})
      : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)) {
    if (!curve_) throw std::invalid_argument("CoordRingElem needs a parent curve");
  }

  static CoordRingElem constant(CurvePtr<R> c, const R& k) { return CoordRingElem(std::move(c), Poly<R>(k)); }
  static CoordRingElem x(CurvePtr<R> c) { return CoordRingElem(std::move(c), Poly<R>::x()); }
  static CoordRingElem y(CurvePtr<R> c) { return CoordRingElem(std::move(c), Poly<R>(), Poly<R>(1)); }

  const CurvePtr<R>& curve_ptr() const { return curve_; }
  const WeierstrassCurve<R>& curve() const { return *curve_; }
  const Poly<R>& u() const { return u_; }
  const Poly<R>& v() const { return v_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  /// Pole order at the point at infinity: x^i has degree 2i, x^i y has 2i + 3.
  long degree() const {
    if (is_zero()) return kDegreeOfZero;
    long du = u_.is_zero() ? kDegreeOfZero : 2 * u_.degree();
    long dv = v_.is_zero() ? kDegreeOfZero : 2 * v_.degree() + 3;
    return std::max(du, dv);
  }

  /// Coefficient of the top monomial.
  R leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero");
    if (!v_.is_zero() && (u_.is_zero() || 2 * v_.degree() + 3 > 2 * u_.degree())) return v_.leading();
    return u_.leading();
  }

  CoordRingElem operator-() const { return CoordRingElem(curve_, -u_, -v_); }
  CoordRingElem& operator+=(const CoordRingElem& o) {
    check_parent(o);
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  CoordRingElem& operator-=(const CoordRingElem& o) {
    check_parent(o);
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
  }
  friend CoordRingElem operator+(CoordRingElem a, const CoordRingElem& b) { return a += b; }
  friend CoordRingElem operator-(CoordRingElem a, const CoordRingElem& b) { return a -= b; }

  friend CoordRingElem operator*(const CoordRingElem& a, const CoordRingElem& b) {
    a.check_parent(b);
    // y^2 = F - h y
    const Poly<R> vv = a.v_ * b.v_;
    Poly<R> u = a.u_ * b.u_ + vv * a.curve_->rhs();
    Poly<R> v = a.u_ * b.v_ + b.u_ * a.v_ - vv * a.curve_->y_linear();
    return CoordRingElem(a.curve_, std::move(u), std::move(v));
  }
  friend CoordRingElem operator*(const R& s, const CoordRingElem& f) { return CoordRingElem(f.curve_, s * f.u_, s * f.v_); }
  CoordRingElem& operator*=(const CoordRingElem& o) { return *this = *this * o; }

  friend bool operator==(const CoordRingElem& a, const CoordRingElem& b) {
    return a.same_parent(b) && a.u_ == b.u_ && a.v_ == b.v_;
  }

  bool same_parent(const CoordRingElem& o) const { return curve_ == o.curve_ || *curve_ == *o.curve_; }

  /// Value at an affine point.
  R operator()(const R& x, const R& y) const { return u_(x) + v_(x) * y; }

 private:
  void check_parent(const CoordRingElem& o) const {
    if (!same_parent(o)) throw ParentMismatch();
  }

  CurvePtr<R> curve_;
  Poly<R> u_, v_;
};

template <class R>
CoordRingElem<R> pow(const CoordRingElem<R>& base, unsigned e) {
  CoordRingElem<R> result = CoordRingElem<R>::constant(base.curve_ptr(), R(1)), b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

template <class R>
std::string to_string(const CoordRingElem<R>& f) {
  return "(" + to_string(f.u()) + ") + (" + to_string(f.v()) + ")*y";
}

/// Which invariant differential defines f -> f'.
///   kGeneral: omega = dx / (2y + a1 x + a3), so x' = 2y + a1 x + a3.
///   kHalf:    omega = 2 dx / (2y + a1 x + a3); on y^2 = x^3 + ax + b this is
///             dx/y with x' = y and y' = (3x^2 + a)/2. Needs 1/2 in R.
enum class DerivationConvention { kGeneral, kHalf };

template <class R>
struct DerivationContext {
  DerivationConvention convention = DerivationConvention::kGeneral;
};

template <class R>
CoordRingElem<R> derive(const CoordRingElem<R>& f, DerivationContext<R> ctx = {}) {
  const auto& c = f.curve();
  const Poly<R> h = c.y_linear();
  const Poly<R> big_f = c.rhs();
  const Poly<R> g = big_f.derivative();  // 3x^2 + 2 a2 x + a4
  const Poly<R> ux = f.u().derivative(), vx = f.v().derivative();
  Poly<R> u = ux * h + R(2) * (vx * big_f) + f.v() * g;
  Poly<R> v = R(2) * ux - vx * h - c.a1() * f.v();
  CoordRingElem<R> out(f.curve_ptr(), std::move(u), std::move(v));
  if (ctx.convention == DerivationConvention::kHalf) out = inverse(in_context(R(2), c.discriminant())) * out;
  return out;
}

/// Pullback under P -> -P, i.e. y -> -y - a1 x - a3.
template <class R>
CoordRingElem<R> neg_pullback(const CoordRingElem<R>& f) {
  return CoordRingElem<R>(f.curve_ptr(), f.u() - f.v() * f.curve().y_linear(), -f.v());
}

template <class R>
struct OddEvenSplit {
  CoordRingElem<R> even;
  CoordRingElem<R> odd;
};

template <class R>
OddEvenSplit<R> odd_even_split(const CoordRingElem<R>& f) {
  R half = inverse(in_context(R(2), f.curve().discriminant()));
  CoordRingElem<R> w = neg_pullback(f);
  return {half * (f + w), half * (f - w)};
}

/// f times its conjugate under negation, a polynomial in x.
template <class R>
Poly<R> norm(const CoordRingElem<R>& f) {
  const auto& c = f.curve();
  return f.u() * f.u() - f.u() * f.v() * c.y_linear() - f.v() * f.v() * c.rhs();
}

/// Rewrites f in the coordinates of transform(curve, m), using
/// x = u^2 X + r, y = u^3 Y + s u^2 X + t.
template <class R>
CoordRingElem<R> transform_function(const CoordRingElem<R>& f, const ModelMap<R>& m,
                                     CurvePtr<R> target = nullptr) {
  if (!target) target = share(transform(f.curve(), m));
  const R u2 = m.u * m.u;
  const Poly<R> xsub{m.r, u2};
  const Poly<R> ysub_x{m.t, m.s * u2};
  const Poly<R> uu = f.u().compose(xsub), vv = f.v().compose(xsub);
  return CoordRingElem<R>(std::move(target), uu + vv * ysub_x, (u2 * m.u) * vv);
}

/// 3 F4 F9' - 7 F4' F9, a scalar multiple of F14.
template <class R>
CoordRingElem<R> build_f14(const CoordRingElem<R>& f4, const CoordRingElem<R>& f9, DerivationContext<R> ctx = {}) {
  return R(3) * (f4 * derive(f9, ctx)) - R(7) * (derive(f4, ctx) * f9);
}

/// left = lambda * right.
template <class R>
struct ProportionalityWitness {
  R lambda;
  CoordRingElem<R> left;
  CoordRingElem<R> right;

  bool holds() const { return left == lambda * right; }
};

/// The scalar relating two elements, if they are proportional over a field.
template <class R>
std::optional<ProportionalityWitness<R>> proportionality(const CoordRingElem<R>& left, const CoordRingElem<R>& right) {
  if (right.is_zero() || left.degree() != right.degree()) return std::nullopt;
  ProportionalityWitness<R> w{divide(left.leading(), right.leading()), left, right};
  if (!w.holds()) return std::nullopt;
  return w;
}

/// x-coordinates of the common affine zeros of a and b, as the monic
/// polynomial whose roots they are. Over a field: a common zero at x0 forces
/// Norm(a), Norm(b) and a_u b_v - a_v b_u to vanish at x0, and conversely.
template <class R>
Poly<R> common_zeros(const CoordRingElem<R>& a, const CoordRingElem<R>& b) {
  if (!a.same_parent(b)) throw ParentMismatch();
  Poly<R> g = poly_gcd(norm(a), norm(b));
  return poly_gcd(g, a.u() * b.v() - a.v() * b.u());
}

}  // namespace shimbelyi
