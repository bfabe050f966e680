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
#include <utility>

#include "shimbelyi/algebra/poly.hpp"

namespace shimbelyi {

class SingularCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
/// The plain constructor does not check Δ; use make() for a validated curve.
template <class R>
class WeierstrassCurve {
 public:
  WeierstrassCurve(R a1, R a2, R a3, R a4, R a6) : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    compute_invariants();
  }
  explicit WeierstrassCurve(const std::array<R, 5>& a) : WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]) {}

  /// Short model y^2 = x^3 + a x + b.
  static WeierstrassCurve short_form(const R& a, const R& b) { return make(R(0), R(0), R(0), a, b); }

  static WeierstrassCurve make(R a1, R a2, R a3, R a4, R a6) {
    WeierstrassCurve c(std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6));
    if (is_zero(c.discriminant())) throw SingularCurve("Weierstrass model has zero discriminant");
    return c;
  }

  const R& a1() const { return a_[0]; }
  const R& a2() const { return a_[1]; }
  const R& a3() const { return a_[2]; }
  const R& a4() const { return a_[3]; }
  const R& a6() const { return a_[4]; }
  const std::array<R, 5>& a_invariants() const { return a_; }

  const R& b2() const { return b2_; }
  const R& b4() const { return b4_; }
  const R& b6() const { return b6_; }
  const R& b8() const { return b8_; }
  const R& c4() const { return c4_; }
  const R& c6() const { return c6_; }
  const R& discriminant() const { return disc_; }

  R j_invariant() const { return divide(R(c4_ * c4_ * c4_), disc_); }

  bool is_short() const { return is_zero(a_[0]) && is_zero(a_[1]) && is_zero(a_[2]); }

  /// x^3 + a2 x^2 + a4 x + a6, the right-hand side.
  Poly<R> rhs() const { return Poly<R>{a_[4], a_[3], a_[1], R(1)}; }
  /// a1 x + a3, the coefficient of y on the left.
  Poly<R> y_linear() const { return Poly<R>{a_[2], a_[0]}; }

  bool contains(const R& x, const R& y) const {
    return is_zero(R(y * y + a_[0] * x * y + a_[2] * y - (x * x * x + a_[1] * x * x + a_[3] * x + a_[4])));
  }

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    for (std::size_t i = 0; i < 5; ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

 private:
  void compute_invariants() {
    const auto& [a1, a2, a3, a4, a6] = a_;
    b2_ = a1 * a1 + R(4) * a2;
    b4_ = R(2) * a4 + a1 * a3;
    b6_ = a3 * a3 + R(4) * a6;
    b8_ = a1 * a1 * a6 + R(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4_ = b2_ * b2_ - R(24) * b4_;
    c6_ = -b2_ * b2_ * b2_ + R(36) * b2_ * b4_ - R(216) * b6_;
    disc_ = -b2_ * b2_ * b8_ - R(8) * b4_ * b4_ * b4_ - R(27) * b6_ * b6_ + R(9) * b2_ * b4_ * b6_;
  }

  std::array<R, 5> a_;
  R b2_, b4_, b6_, b8_, c4_, c6_, disc_;
};

template <class R>
std::string to_string(const WeierstrassCurve<R>& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) out += ",";
    out += to_string(c.a_invariants()[i]);
  }
  return out + "]";
}

template <class R>
class CurvePoint {
 public:
  CurvePoint() = default;  // point at infinity
  CurvePoint(R x, R y) : xy_(std::make_pair(std::move(x), std::move(y))) {}

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return !xy_.has_value(); }
  const R& x() const { return affine().first; }
  const R& y() const { return affine().second; }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
    return p.x() == q.x() && p.y() == q.y();
  }

 private:
  const std::pair<R, R>& affine() const {
    if (!xy_) throw std::logic_error("point at infinity has no affine coordinates");
    return *xy_;
  }
  std::optional<std::pair<R, R>> xy_;
};

template <class R>
std::string to_string(const CurvePoint<R>& p) {
  if (p.is_infinity()) return "infinity";
  return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

template <class R>
bool on_curve(const WeierstrassCurve<R>& c, const CurvePoint<R>& p) {
  return p.is_infinity() || c.contains(p.x(), p.y());
}

template <class R>
CurvePoint<R> negate(const WeierstrassCurve<R>& c, const CurvePoint<R>& p) {
  if (p.is_infinity()) return p;
  return CurvePoint<R>(p.x(), R(-p.y() - c.a1() * p.x() - c.a3()));
}

/// Chord-and-tangent addition. Over residue rings a non-invertible
/// denominator raises BadReduction.
template <class R>
CurvePoint<R> group_law(const WeierstrassCurve<R>& c, const CurvePoint<R>& p, const CurvePoint<R>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const R &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  R lambda, nu;
  if (x1 == x2) {
    R denom = R(2) * y1 + c.a1() * x1 + c.a3();
    if (!(y1 == y2) || is_zero(denom)) return CurvePoint<R>::infinity();
    R num = R(3) * x1 * x1 + R(2) * c.a2() * x1 + c.a4() - c.a1() * y1;
    R inv = inverse(denom);
    lambda = num * inv;
    nu = (-x1 * x1 * x1 + c.a4() * x1 + R(2) * c.a6() - c.a3() * y1) * inv;
  } else {
    R inv = inverse(R(x2 - x1));
    lambda = (y2 - y1) * inv;
    nu = (y1 * x2 - y2 * x1) * inv;
  }
  R x3 = lambda * lambda + c.a1() * lambda - c.a2() - x1 - x2;
  R y3 = -(lambda + c.a1()) * x3 - nu - c.a3();
  return CurvePoint<R>(std::move(x3), std::move(y3));
}

template <class R>
CurvePoint<R> scalar_multiple(const WeierstrassCurve<R>& c, long n, CurvePoint<R> p) {
  if (n < 0) return scalar_multiple(c, -n, negate(c, p));
  CurvePoint<R> acc;
  while (n > 0) {
    if (n & 1) acc = group_law(c, acc, p);
    p = group_law(c, p, p);
    n >>= 1;
  }
  return acc;
}

/// Least n <= bound with nP = O, or nullopt when no such n exists.
template <class R>
std::optional<long> point_order(const WeierstrassCurve<R>& c, const CurvePoint<R>& p, long bound) {
  if (bound < 1) throw std::invalid_argument("point_order: bound must be >= 1");
  CurvePoint<R> acc = p;
  for (long n = 1; n <= bound; ++n) {
    if (acc.is_infinity()) return n;
    acc = group_law(c, acc, p);
  }
  return std::nullopt;
}

/// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
template <class R>
struct ModelMap {
  R u{1}, r{0}, s{0}, t{0};

  static ModelMap identity() { return ModelMap{R(1), R(0), R(0), R(0)}; }

  /// The map obtained by applying *this first and then `next`.
  ModelMap then(const ModelMap& next) const {
    const R u2 = u * u;
    return ModelMap{u * next.u, u2 * next.r + r, u * next.s + s, u2 * u * next.t + s * u2 * next.r + t};
  }

  ModelMap inverse_map() const {
    R ui = inverse(u);
    return ModelMap{ui, -r * ui * ui, -s * ui, (r * s - t) * ui * ui * ui};
  }

  friend bool operator==(const ModelMap& a, const ModelMap& b) {
    return a.u == b.u && a.r == b.r && a.s == b.s && a.t == b.t;
  }
};

template <class R>
WeierstrassCurve<R> transform(const WeierstrassCurve<R>& c, const ModelMap<R>& m) {
  const auto& [a1, a2, a3, a4, a6] = c.a_invariants();
  const R &r = m.r, &s = m.s, &t = m.t;
  R ui = inverse(m.u);
  R ui2 = ui * ui, ui3 = ui2 * ui;
  return WeierstrassCurve<R>((a1 + R(2) * s) * ui, (a2 - s * a1 + R(3) * r - s * s) * ui2,
                             (a3 + r * a1 + R(2) * t) * ui3,
                             (a4 - s * a3 + R(2) * r * a2 - (t + r * s) * a1 + R(3) * r * r - R(2) * s * t) * ui2 * ui2,
                             (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) * ui3 * ui3);
}

template <class R>
CurvePoint<R> transform_point(const CurvePoint<R>& p, const ModelMap<R>& m) {
  if (p.is_infinity()) return p;
  R ui = inverse(m.u);
  R xr = p.x() - m.r;
  return CurvePoint<R>(xr * ui * ui, (p.y() - m.s * xr - m.t) * ui * ui * ui);
}

}  // namespace shimbelyi
