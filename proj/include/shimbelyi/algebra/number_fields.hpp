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
#include <cmath>
#include <numbers>
#include <string>

#include "shimbelyi/algebra/poly.hpp"
#include "shimbelyi/algebra/resultant.hpp"

namespace shimbelyi {

/// e0 + e1 c + e2 c^2 in Q(c), where c = 2 cos(2 pi / 7) is a root of
/// X^3 + X^2 - 2X - 1.
class CubicFieldElem {
 public:
  CubicFieldElem() = default;
  CubicFieldElem(long q) : e_{Rational(q), 0, 0} {}  // NOLINT: rational constants
  CubicFieldElem(const Rational& q) : e_{q, 0, 0} {}  // NOLINT
  CubicFieldElem(Rational e0, Rational e1, Rational e2) : e_{std::move(e0), std::move(e1), std::move(e2)} {}

  static CubicFieldElem generator() { return CubicFieldElem(0, 1, 0); }
  static QPoly minimal_polynomial() { return QPoly{Rational(-1), Rational(-2), Rational(1), Rational(1)}; }

  const Rational& operator[](std::size_t i) const { return e_[i]; }
  bool is_zero() const { return sgn(e_[0]) == 0 && sgn(e_[1]) == 0 && sgn(e_[2]) == 0; }
  bool is_rational() const { return sgn(e_[1]) == 0 && sgn(e_[2]) == 0; }

  QPoly as_poly() const { return QPoly{e_[0], e_[1], e_[2]}; }

  CubicFieldElem operator-() const { return {-e_[0], -e_[1], -e_[2]}; }
  friend CubicFieldElem operator+(const CubicFieldElem& a, const CubicFieldElem& b) {
    return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2]};
  }
  friend CubicFieldElem operator-(const CubicFieldElem& a, const CubicFieldElem& b) {
    return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2]};
  }
  friend CubicFieldElem operator*(const CubicFieldElem& a, const CubicFieldElem& b) {
    // c^3 = 1 + 2c - c^2, c^4 = -1 - c + 3c^2
    std::array<Rational, 5> p;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) p[i + j] += a.e_[i] * b.e_[j];
    return {p[0] + p[3] - p[4], p[1] + 2 * p[3] - p[4], p[2] - p[3] + 3 * p[4]};
  }
  CubicFieldElem& operator+=(const CubicFieldElem& o) { return *this = *this + o; }
  CubicFieldElem& operator-=(const CubicFieldElem& o) { return *this = *this - o; }
  CubicFieldElem& operator*=(const CubicFieldElem& o) { return *this = *this * o; }
  friend bool operator==(const CubicFieldElem& a, const CubicFieldElem& b) {
    return a.e_[0] == b.e_[0] && a.e_[1] == b.e_[1] && a.e_[2] == b.e_[2];
  }

  /// The Galois automorphism c -> c^2 - 2.
  CubicFieldElem conjugate() const {
    CubicFieldElem s(-2, 0, 1);
    return CubicFieldElem(e_[0]) + CubicFieldElem(e_[1]) * s + CubicFieldElem(e_[2]) * s * s;
  }

  /// Value under the real embedding c -> 2 cos(2 pi k / 7), k = 1, 2, 3.
  double embed(int k) const {
    double c = 2.0 * std::cos(2.0 * std::numbers::pi * k / 7.0);
    return e_[0].get_d() + e_[1].get_d() * c + e_[2].get_d() * c * c;
  }

  /// Characteristic polynomial of multiplication by this element.
  QPoly characteristic_polynomial() const {
    std::array<CubicFieldElem, 3> cols = {*this, *this * generator(), *this * generator() * generator()};
    // m[i][j] = coordinate i of column j
    auto m = [&](std::size_t i, std::size_t j) -> const Rational& { return cols[j][i]; };
    Rational tr = m(0, 0) + m(1, 1) + m(2, 2);
    Rational s2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                  m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    return QPoly{Rational(-cubic_norm_of(*this)), s2, Rational(-tr), Rational(1)};
  }

  static Rational cubic_norm_of(const CubicFieldElem& e) {
    // Res(minpoly, e(X)) with a monic minpoly is the product of e over the conjugates.
    return resultant(minimal_polynomial(), e.as_poly());
  }

 private:
  std::array<Rational, 3> e_{};
};

inline bool is_zero(const CubicFieldElem& e) { return e.is_zero(); }

inline CubicFieldElem inverse(const CubicFieldElem& e) {
  if (e.is_zero()) throw std::domain_error("inverse of zero in Q(c)");
  auto [g, s, t] = poly_xgcd(e.as_poly(), CubicFieldElem::minimal_polynomial());
  (void)t;
  return CubicFieldElem(s[0], s[1], s[2]);
}

/// Product of the three conjugates of e.
inline Rational cubic_norm(const CubicFieldElem& e) { return CubicFieldElem::cubic_norm_of(e); }

inline std::string to_string(const CubicFieldElem& e) {
  return "(" + to_string(e[0]) + ") + (" + to_string(e[1]) + ")*c + (" + to_string(e[2]) + ")*c^2";
}

/// True iff every real embedding of e is negative.
inline bool is_totally_negative(const CubicFieldElem& e) {
  QPoly cp = e.characteristic_polynomial();
  QPoly sf = exact_quotient(cp, poly_gcd(cp, cp.derivative()));
  long negative_roots = sturm_count(sf, std::nullopt, Rational(0)) - (sgn(sf(Rational(0))) == 0 ? 1 : 0);
  // sf has degree 3 (e irrational) or 1 (e rational); all roots negative iff count == degree
  return negative_roots == sf.degree();
}

/// u + v*zeta with zeta a primitive cube root of unity (zeta^2 = -1 - zeta).
class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(long u) : u_(u), v_(0) {}  // NOLINT
  CycloElem(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {}

  static CycloElem zeta() { return CycloElem(0, 1); }

  const Rational& re_part() const { return u_; }
  const Rational& zeta_part() const { return v_; }
  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const { return sgn(v_) == 0; }

  CycloElem operator-() const { return {-u_, -v_}; }
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) { return {a.u_ + b.u_, a.v_ + b.v_}; }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return {a.u_ - b.u_, a.v_ - b.v_}; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    return {a.u_ * b.u_ - a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_ - a.v_ * b.v_};
  }
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

  /// zeta -> zeta^2 = -1 - zeta.
  CycloElem conjugate() const { return {u_ - v_, -v_}; }
  Rational norm() const { return u_ * u_ - u_ * v_ + v_ * v_; }

 private:
  Rational u_{0}, v_{0};
};

inline bool is_zero(const CycloElem& e) { return e.is_zero(); }

inline std::string to_string(const CycloElem& e) {
  return "(" + to_string(e.re_part()) + ") + (" + to_string(e.zeta_part()) + ")*zeta";
}

}  // namespace shimbelyi
