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

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shimbelyi/algebra/ring.hpp"

namespace shimbelyi {

template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no stored coefficients and degree kZeroDegree.
template <class R>
class Poly {
 public:
  static constexpr long kZeroDegree = -1;

  Poly() = default;
  Poly(long c) : coeffs_{R(c)} { normalize(); }  // NOLINT: constants
  Poly(const R& c) : coeffs_{c} { normalize(); }  // NOLINT
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly monomial(const R& c, std::size_t degree) {
    std::vector<R> v(degree + 1, R(0));
    v[degree] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(R(1), 1); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i (zero beyond the degree).
  R operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
  const R& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  template <class F>
  Poly map(F&& f) const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return Poly(std::move(v));
  }

  Poly operator-() const { return map([](const R& c) { return R(-c); }); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (shimbelyi::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const R& s, const Poly& p) {
    return p.map([&](const R& c) { return R(s * c); });
  }
  friend Poly operator*(const Poly& p, const R& s) { return s * p; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<R> v(coeffs_.size() - 1, R(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = R(static_cast<long>(i)) * coeffs_[i];
    return Poly(std::move(v));
  }

  /// Horner evaluation at a point of any ring S that R converts into.
  template <class S>
  S eval(const S& at) const {
    S acc = S(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = S(acc * at + S(*it));
    return acc;
  }
  R operator()(const R& at) const { return eval<R>(at); }

  /// f(g(x)).
  Poly compose(const Poly& g) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + Poly(*it);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    R inv = inverse(leading());
    return inv * *this;
  }

  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<R> v(k, R(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && shimbelyi::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

/// Division with remainder; the divisor's leading coefficient must be a unit.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<R>(), a};
  R inv_lc = inverse(b.leading());
  std::vector<R> rem = a.coeffs();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), R(0));
  const auto db = static_cast<std::size_t>(b.degree());
  for (long i = a.degree(); i >= b.degree(); --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (is_zero(rem[ui])) continue;
    R q = rem[ui] * inv_lc;
    quo[ui - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[ui - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divrem(a, b).second;
}

/// Exact division; throws if the remainder is nonzero.
template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

/// Monic gcd over a field.
template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    Poly<R> r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd over a field: returns (g, s, t) with s a + t b = g, g monic.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> poly_xgcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1;
    Poly<R> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  R inv = inverse(r0.leading());
  return {inv * r0, inv * s0, inv * t0};
}

/// base^e mod m, for m with unit leading coefficient.
template <class R>
Poly<R> pow_mod(Poly<R> base, Integer e, const Poly<R>& m) {
  Poly<R> result = Poly<R>(1) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()) != 0) result = (result * base) % m;
    e >>= 1;
    if (e > 0) base = (base * base) % m;
  }
  return result;
}

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned e) {
  Poly<R> result(1), b = base;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

/// Human-readable form in the variable `var`, highest degree first.
template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const R& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    if (!first) out << " + ";
    first = false;
    std::string cs = to_string(c);
    if (i == 0) {
      out << cs;
    } else {
      if (cs != "1") out << "(" << cs << ")*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

/// Integer-coefficient helpers used by the factorization and reconstruction code.
using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

inline Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return g;
}

inline ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return f;
  Integer g = content(f);
  if (f.leading() < 0) g = -g;
  return f.map([&](const Integer& c) { return Integer(c / g); });
}

/// Scales a rational polynomial to a primitive integer polynomial with positive
/// leading coefficient.
inline ZPoly to_primitive_integer(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> v;
  for (const auto& c : f.coeffs()) v.push_back(Integer(c.get_num() * (den / c.get_den())));
  return primitive_part(ZPoly(std::move(v)));
}

inline QPoly to_rational(const ZPoly& f) {
  std::vector<Rational> v;
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

/// Reduces an integer polynomial modulo m, coefficients in [0, m).
inline ZPoly reduce_mod(const ZPoly& f, const Integer& m) {
  return f.map([&](const Integer& c) { return mod_floor(c, m); });
}

/// Reduces modulo m with symmetric representatives in (-m/2, m/2].
inline ZPoly reduce_symmetric(const ZPoly& f, const Integer& m) {
  Integer half = m / 2;
  return f.map([&](const Integer& c) {
    Integer r = mod_floor(c, m);
    return r > half ? Integer(r - m) : r;
  });
}

}  // namespace shimbelyi
