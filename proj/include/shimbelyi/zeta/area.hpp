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

// zeta_K(-1) of a cyclic cubic field K of conductor f, as
// zeta(-1) L(-1, chi) L(-1, chi-bar), and the hyperbolic area -zeta_K(-1)/2.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "shimbelyi/algebra/integer.hpp"
#include "shimbelyi/algebra/number_fields.hpp"

namespace shimbelyi {

class UnsupportedConductor : public std::invalid_argument {
 public:
  explicit UnsupportedConductor(long f)
      : std::invalid_argument("no cubic character table for conductor " + std::to_string(f)) {}
};

/// A Dirichlet character mod f with values in Z[zeta_3].
struct CharacterData {
  long conductor = 0;
  /// values[a] = chi(a) for 0 <= a < f.
  std::vector<CycloElem> values;

  const CycloElem& operator()(long a) const {
    long r = a % conductor;
    if (r < 0) r += conductor;
    return values[static_cast<std::size_t>(r)];
  }

  CharacterData conjugate() const {
    CharacterData out{conductor, {}};
    for (const auto& v : values) out.values.push_back(v.conjugate());
    return out;
  }

  bool is_trivial() const {
    for (long a = 1; a < conductor; ++a)
      if (std::gcd(a, conductor) == 1 && !(values[static_cast<std::size_t>(a)] == CycloElem(1))) return false;
    return true;
  }
};

/// The cubic character mod f sending the given primitive root to zeta.
inline CharacterData cubic_character(long f, long generator) {
  CharacterData chi{f, std::vector<CycloElem>(static_cast<std::size_t>(f), CycloElem(0))};
  const std::array<CycloElem, 3> powers = {CycloElem(1), CycloElem::zeta(), CycloElem::zeta() * CycloElem::zeta()};
  long g = 1;
  long k = 0;
  do {
    chi.values[static_cast<std::size_t>(g)] = powers[static_cast<std::size_t>(k % 3)];
    g = g * generator % f;
    ++k;
  } while (g != 1);
  long units = 0;
  for (long a = 1; a < f; ++a) units += std::gcd(a, f) == 1 ? 1 : 0;
  if (k != units) throw std::invalid_argument("cubic_character: not a primitive root");
  return chi;
}

inline CharacterData cubic_character(long f) {
  switch (f) {
    case 7:
      return cubic_character(7, 3);
    case 9:
      return cubic_character(9, 2);
    case 13:
      return cubic_character(13, 2);
    default:
      throw UnsupportedConductor(f);
  }
}

/// B_{2,chi} = f * sum_{a=1}^{f} chi(a) B_2(a/f), B_2(x) = x^2 - x + 1/6.
inline CycloElem gen_bernoulli_2(const CharacterData& chi) {
  if (chi.is_trivial()) throw std::invalid_argument("gen_bernoulli_2: trivial character");
  const long f = chi.conductor;
  CycloElem sum(0);
  for (long a = 1; a <= f; ++a) {
    Rational x(a, f);
    x.canonicalize();
    Rational b2 = x * x - x + Rational(1, 6);
    const CycloElem& c = chi(a);
    sum += CycloElem(c.re_part() * b2, c.zeta_part() * b2);
  }
  return CycloElem(sum.re_part() * f, sum.zeta_part() * f);
}

struct AreaResult {
  long conductor = 0;
  Rational zeta_minus1;
  Rational area;
};

inline AreaResult shimizu_area(long f) {
  CharacterData chi = cubic_character(f);
  CycloElem b = gen_bernoulli_2(chi);
  // L(-1, chi) = -B/2; the product with its conjugate is |B|^2 / 4
  CycloElem l = CycloElem(-b.re_part() / 2, -b.zeta_part() / 2);
  CycloElem prod = l * l.conjugate();
  if (!prod.is_rational()) throw std::logic_error("shimizu_area: L-value product is not rational");
  Rational zeta = Rational(-1, 12) * prod.re_part();
  return {f, zeta, Rational(-zeta / 2)};
}

struct OrbifoldArea {
  Rational area;
  bool hyperbolic = false;
};

/// 2g - 2 + sum (1 - 1/e_i): the area of the orbifold in units of 2 pi.
inline OrbifoldArea orbifold_area(long genus, const std::vector<long>& orders) {
  if (genus < 0) throw std::invalid_argument("orbifold_area: negative genus");
  Rational a(2 * genus - 2);
  for (long e : orders) {
    if (e < 2) throw std::invalid_argument("orbifold_area: elliptic orders must be at least 2");
    a += 1 - Rational(1, e);
  }
  a.canonicalize();
  return {a, a > 0};
}

}  // namespace shimbelyi
