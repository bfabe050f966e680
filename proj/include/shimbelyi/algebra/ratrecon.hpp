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

#include <optional>
#include <stdexcept>

#include "shimbelyi/algebra/integer.hpp"

namespace shimbelyi {

/// Recovers n/d from r = n * d^{-1} mod m via Gaussian reduction of the
/// lattice spanned by (m, 0) and (r, 1).
///
/// Succeeds only when |n|, d <= floor(sqrt(m/2)), gcd(n, d) = 1 and d is
/// coprime to m; under that bound the fraction is unique.
inline std::optional<Rational> rat_reconstruct(const Integer& residue, const Integer& modulus) {
  if (modulus < 5) throw std::invalid_argument("rat_reconstruct: modulus must be >= 5");
  const Integer bound = isqrt(Integer(modulus / 2));

  // Lattice basis vectors (a0, a1) and (b0, b1); keep |b| <= |a|.
  Integer a0 = modulus, a1 = 0;
  Integer b0 = mod_floor(residue, modulus), b1 = 1;
  auto norm2 = [](const Integer& u, const Integer& v) { return Integer(u * u + v * v); };
  if (norm2(a0, a1) < norm2(b0, b1)) {
    std::swap(a0, b0);
    std::swap(a1, b1);
  }
  while (true) {
    // a -= round(<a,b>/<b,b>) * b
    Integer dot = a0 * b0 + a1 * b1;
    Integer nb = norm2(b0, b1);
    Integer q;
    // round-half-up of dot/nb
    mpz_fdiv_q(q.get_mpz_t(), Integer(2 * dot + nb).get_mpz_t(), Integer(2 * nb).get_mpz_t());
    a0 -= q * b0;
    a1 -= q * b1;
    if (norm2(a0, a1) >= nb) break;
    std::swap(a0, b0);
    std::swap(a1, b1);
  }
  Integer n = b0, d = b1;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d == 0 || abs_int(n) > bound || d > bound) return std::nullopt;
  if (gcd(n, d) != 1 || gcd(d, modulus) != 1) return std::nullopt;
  if (mod_floor(n - residue * d, modulus) != 0) return std::nullopt;
  return make_rational(n, d);
}

/// Encodes n/d as a residue modulo m (d must be invertible mod m).
inline Integer encode_rational(const Rational& q, const Integer& modulus) {
  return mod_floor(q.get_num() * inverse_mod(q.get_den(), modulus), modulus);
}

}  // namespace shimbelyi
