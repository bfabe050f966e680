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

// Uniform free-function interface over the coefficient rings used by the
// generic containers (Poly, WeierstrassCurve, CoordRingElem).

#include <concepts>
#include <stdexcept>
#include <string>

#include "shimbelyi/algebra/integer.hpp"
#include "shimbelyi/algebra/residue.hpp"

namespace shimbelyi {

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ResidueInt& r) { return r.is_zero(); }

inline Integer inverse(const Integer& z) {
  if (z == 1 || z == -1) return z;
  throw std::domain_error("integer " + z.get_str() + " is not a unit");
}
inline Rational inverse(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("division by zero");
  return Rational(1) / q;
}
inline ResidueInt inverse(const ResidueInt& r) { return r.inverse(); }

template <class R>
concept CoefficientRing = requires(R a, R b) {
  R(1);
  { a + b };
  { a - b };
  { a * b };
  { -a };
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Gives a bare constant the modulus of `ctx` when R is a residue ring.
template <class R>
R in_context(const R& value, const R& /*ctx*/) {
  return value;
}
inline ResidueInt in_context(const ResidueInt& value, const ResidueInt& ctx) {
  if (value.has_modulus() || !ctx.has_modulus()) return value;
  return ResidueInt(value.value(), ctx.modulus_ptr());
}

/// Exact quotient a / b for rings where b is invertible.
template <class R>
R divide(const R& a, const R& b) {
  return R(a * inverse(b));
}

}  // namespace shimbelyi
