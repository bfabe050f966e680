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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shimbelyi {

/// Element of F_q = F_p[w]/(g(w)) as a coefficient vector of length deg g.
struct FiniteFieldElem {
  std::vector<std::uint32_t> coeffs;
  friend bool operator==(const FiniteFieldElem&, const FiniteFieldElem&) = default;
};

/// Small finite field F_{p^m} with an explicit defining polynomial.
/// Elements are enumerated by index sum c_i p^i, which gives the labelling
/// of P^1(F_q) used by the monodromy code.
class FiniteField {
 public:
  /// `modulus` lists the coefficients of a monic irreducible g, lowest first.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), modulus_(std::move(modulus)) {
    if (p_ < 2 || modulus_.size() < 2 || modulus_.back() != 1) {
      throw std::invalid_argument("FiniteField: need prime p and monic modulus of degree >= 1");
    }
    degree_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    order_ = 1;
    for (std::uint32_t i = 0; i < degree_; ++i) order_ *= p_;
    if (!modulus_irreducible()) throw std::invalid_argument("FiniteField: modulus is reducible");
  }

  /// F_27 = F_3[w]/(w^3 - w - 1).
  static FiniteField f27() { return FiniteField(3, {2, 2, 0, 1}); }
  /// F_8 = F_2[w]/(w^3 + w + 1).
  static FiniteField f8() { return FiniteField(2, {1, 1, 0, 1}); }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FiniteFieldElem zero() const { return FiniteFieldElem{std::vector<std::uint32_t>(degree_, 0)}; }
  FiniteFieldElem one() const { return from_int(1); }
  FiniteFieldElem from_int(std::int64_t v) const {
    FiniteFieldElem e = zero();
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    e.coeffs[0] = static_cast<std::uint32_t>(r);
    return e;
  }

  FiniteFieldElem from_index(std::uint32_t idx) const {
    if (idx >= order_) throw std::out_of_range("FiniteField::from_index");
    FiniteFieldElem e = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) {
      e.coeffs[i] = idx % p_;
      idx /= p_;
    }
    return e;
  }
  std::uint32_t index(const FiniteFieldElem& e) const {
    std::uint32_t idx = 0;
    for (std::uint32_t i = degree_; i-- > 0;) idx = idx * p_ + e.coeffs[i];
    return idx;
  }

  bool is_zero(const FiniteFieldElem& e) const {
    for (auto c : e.coeffs)
      if (c != 0) return false;
    return true;
  }

  FiniteFieldElem add(const FiniteFieldElem& a, const FiniteFieldElem& b) const {
    FiniteFieldElem r = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    return r;
  }
  FiniteFieldElem neg(const FiniteFieldElem& a) const {
    FiniteFieldElem r = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) r.coeffs[i] = (p_ - a.coeffs[i]) % p_;
    return r;
  }
  FiniteFieldElem sub(const FiniteFieldElem& a, const FiniteFieldElem& b) const { return add(a, neg(b)); }

  FiniteFieldElem mul(const FiniteFieldElem& a, const FiniteFieldElem& b) const {
    std::vector<std::uint32_t> prod(2 * degree_ - 1, 0);
    for (std::uint32_t i = 0; i < degree_; ++i)
      for (std::uint32_t j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p_;
    for (std::size_t k = prod.size(); k-- > degree_;) {
      std::uint32_t c = prod[k];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < degree_; ++j) {
        std::size_t idx = k - degree_ + j;
        prod[idx] = (prod[idx] + (p_ - c) * modulus_[j]) % p_;
      }
      prod[k] = 0;
    }
    prod.resize(degree_);
    return FiniteFieldElem{prod};
  }

  FiniteFieldElem pow(FiniteFieldElem base, std::uint64_t e) const {
    FiniteFieldElem r = one();
    while (e > 0) {
      if (e & 1u) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  FiniteFieldElem inv(const FiniteFieldElem& a) const {
    if (is_zero(a)) throw std::domain_error("FiniteField: inverse of zero");
    return pow(a, order_ - 2);
  }

 private:
  // Rabin-style check: a degree-m polynomial with no roots in any F_{p^k},
  // k <= m/2, is irreducible. Brute force is fine for the tiny fields used here.
  bool modulus_irreducible() const {
    std::vector<std::uint32_t> g = modulus_;
    for (std::uint32_t d = 1; 2 * d <= degree_; ++d) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p_;
      // enumerate monic polynomials of degree d and test divisibility
      for (std::uint32_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> h(d + 1, 0);
        std::uint32_t c = code;
        for (std::uint32_t i = 0; i < d; ++i) {
          h[i] = c % p_;
          c /= p_;
        }
        h[d] = 1;
        std::vector<std::uint32_t> r = g;
        for (std::size_t k = r.size(); k-- > d;) {
          std::uint32_t q = r[k];
          if (q == 0) continue;
          for (std::uint32_t j = 0; j <= d; ++j) {
            std::size_t idx = k - d + j;
            r[idx] = (r[idx] + (p_ - q) * h[j]) % p_;
          }
        }
        bool zero = true;
        for (std::uint32_t i = 0; i < d; ++i)
          if (r[i] != 0) zero = false;
        if (zero) return false;
      }
    }
    return true;
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t degree_ = 1;
  std::uint32_t order_ = 1;
};

}  // namespace shimbelyi
