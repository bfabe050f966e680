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

#include <memory>
#include <stdexcept>
#include <string>

#include "shimbelyi/algebra/integer.hpp"

namespace shimbelyi {

/// Raised when an element of Z/p^k that must be inverted is not a unit.
/// `factor` is gcd(element, modulus), the part of the modulus responsible.
class BadReduction : public std::runtime_error {
 public:
  BadReduction(Integer factor, const std::string& what)
      : std::runtime_error(what), factor_(std::move(factor)) {}
  const Integer& factor() const { return factor_; }

 private:
  Integer factor_;
};

struct PrimePowerModulus {
  Integer prime;
  unsigned exponent = 1;
  Integer value;
};

using ModulusPtr = std::shared_ptr<const PrimePowerModulus>;

/// Builds the descriptor for p^k. Primality of p is checked.
inline ModulusPtr make_modulus(const Integer& p, unsigned k = 1) {
  if (k == 0) throw std::invalid_argument("modulus exponent must be >= 1");
  if (!is_probable_prime(p)) throw std::invalid_argument("modulus base must be prime: " + p.get_str());
  return std::make_shared<const PrimePowerModulus>(PrimePowerModulus{p, k, pow_int(p, k)});
}

/// An element of Z/p^k held as its canonical representative in [0, p^k).
///
/// A ResidueInt built from a plain integer has no modulus yet; it behaves
/// as an integer constant and adopts the modulus of the first residue it
/// is combined with. This lets generic code write `R(3)` for any
/// coefficient ring. Changing precision is always an explicit `reencode`.
class ResidueInt {
 public:
  ResidueInt() = default;
  ResidueInt(long v) : value_(v) {}  // NOLINT: implicit integer constants
  ResidueInt(const Integer& v, ModulusPtr m) : value_(v), modulus_(std::move(m)) { reduce(); }

  const Integer& value() const { return value_; }
  const ModulusPtr& modulus_ptr() const { return modulus_; }
  bool has_modulus() const { return modulus_ != nullptr; }
  const Integer& modulus() const {
    if (!modulus_) throw std::logic_error("residue has no modulus attached");
    return modulus_->value;
  }

  /// Representative in (-m/2, m/2].
  Integer symmetric() const {
    if (!modulus_) return value_;
    Integer half = modulus_->value / 2;
    return value_ > half ? Integer(value_ - modulus_->value) : value_;
  }

  ResidueInt reencode(ModulusPtr m) const { return ResidueInt(value_, std::move(m)); }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const {
    if (!modulus_) return value_ == 1 || value_ == -1;
    return gcd(value_, modulus_->value) == 1;
  }

  ResidueInt inverse() const {
    if (!modulus_) {
      if (value_ == 1 || value_ == -1) return *this;
      throw std::domain_error("cannot invert an integer constant without a modulus");
    }
    Integer g = gcd(value_, modulus_->value);
    if (g != 1) {
      throw BadReduction(g, "non-invertible residue " + value_.get_str() + " modulo " +
                                modulus_->value.get_str());
    }
    return ResidueInt(inverse_mod(value_, modulus_->value), modulus_);
  }

  ResidueInt operator-() const { return ResidueInt(Integer(-value_), modulus_, raw_tag{}); }

  ResidueInt& operator+=(const ResidueInt& o) { return combine(o, value_ + o.value_); }
  ResidueInt& operator-=(const ResidueInt& o) { return combine(o, value_ - o.value_); }
  ResidueInt& operator*=(const ResidueInt& o) { return combine(o, value_ * o.value_); }
  ResidueInt& operator/=(const ResidueInt& o) {
    ResidueInt inv = adopt_for(o).inverse();
    return *this *= inv;
  }

  friend ResidueInt operator+(ResidueInt a, const ResidueInt& b) { return a += b; }
  friend ResidueInt operator-(ResidueInt a, const ResidueInt& b) { return a -= b; }
  friend ResidueInt operator*(ResidueInt a, const ResidueInt& b) { return a *= b; }
  friend ResidueInt operator/(ResidueInt a, const ResidueInt& b) { return a /= b; }

  friend bool operator==(const ResidueInt& a, const ResidueInt& b) {
    const ModulusPtr& m = a.modulus_ ? a.modulus_ : b.modulus_;
    if (!m) return a.value_ == b.value_;
    if (a.modulus_ && b.modulus_) check_same(a.modulus_, b.modulus_);
    return mod_floor(a.value_ - b.value_, m->value) == 0;
  }

 private:
  struct raw_tag {};
  ResidueInt(Integer v, ModulusPtr m, raw_tag) : value_(std::move(v)), modulus_(std::move(m)) {
    reduce();
  }

  static void check_same(const ModulusPtr& a, const ModulusPtr& b) {
    if (a != b && a->value != b->value) {
      throw std::invalid_argument("residues with different moduli: " + a->value.get_str() +
                                  " vs " + b->value.get_str());
    }
  }

  ResidueInt adopt_for(const ResidueInt& o) const {
    if (o.modulus_ || !modulus_) return o;
    return ResidueInt(o.value_, modulus_);
  }

  ResidueInt& combine(const ResidueInt& o, Integer v) {
    if (modulus_ && o.modulus_) check_same(modulus_, o.modulus_);
    if (!modulus_) modulus_ = o.modulus_;
    value_ = std::move(v);
    reduce();
    return *this;
  }

  void reduce() {
    if (modulus_) {
      if (value_ < 0 || value_ >= modulus_->value) value_ = mod_floor(value_, modulus_->value);
    }
  }

  Integer value_;
  ModulusPtr modulus_;
};

inline std::string to_string(const ResidueInt& r) { return r.value().get_str(); }

}  // namespace shimbelyi
